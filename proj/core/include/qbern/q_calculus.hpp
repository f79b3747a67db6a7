#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qbern/log_laurent.hpp"
#include "qbern/padic.hpp"
#include "qbern/rational.hpp"

namespace qbern {

enum class QMode {
  kFormal,  // q != 0, 1 only; enough for the recurrences
  kPadic,   // v_p(q - 1) >= 1 (>= 2 for p = 2), so q^x = exp(x log q) on Z_p
  kReal,    // 0 < q < 1, so geometric series in q converge
};

class QParam {
 public:
  /// Each factory throws std::invalid_argument when q is not admissible for the mode.
  static QParam formal(const Rational& q);
  static QParam padic(const Rational& q, const PadicContext& ctx);
  static QParam real(const Rational& q);

  const Rational& value() const noexcept { return q_; }
  QMode mode() const noexcept { return mode_; }
  /// Throws std::logic_error outside p-adic mode.
  const PadicContext& context() const;
  std::uint64_t prime() const { return context().prime(); }

  /// q^{-1}. p-adic admissibility is preserved; a real q in (0,1) becomes formal.
  QParam inverse() const;

 private:
  QParam(Rational q, QMode mode, std::optional<PadicContext> ctx)
      : q_(std::move(q)), mode_(mode), ctx_(std::move(ctx)) {}

  Rational q_;
  QMode mode_;
  std::optional<PadicContext> ctx_;
};

/// [x]_q = (1 - q^x) / (1 - q), exact. Negative x is allowed.
Rational q_bracket(long x, const Rational& q);

/// Finite combination x -> sum_l c_l q^{l x} over signed exponents l.
/// Functions of q^{-1} are stored with negated exponents in the same base q.
class CharacterSum {
 public:
  CharacterSum() = default;
  static CharacterSum character(long exponent, const Rational& coefficient = Rational(1));

  const std::map<long, Rational>& terms() const noexcept { return terms_; }
  Rational coefficient(long exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Exact value at an integer point.
  Rational evaluate(long x, const Rational& q) const;

  CharacterSum& operator+=(const CharacterSum& b);
  friend CharacterSum operator+(CharacterSum a, const CharacterSum& b) { return a += b; }
  /// Pointwise product: exponents add.
  friend CharacterSum operator*(const CharacterSum& a, const CharacterSum& b);
  friend bool operator==(const CharacterSum& a, const CharacterSum& b) { return a.terms_ == b.terms_; }

  CharacterSum scaled(const Rational& s) const;
  /// Multiplies by q^{k x}.
  CharacterSum shifted(long k) const;
  /// x -> -x.
  CharacterSum reflected() const;

  /// "c_l·q^{l x}" terms joined with " + ".
  std::string to_string() const;

 private:
  void prune();

  std::map<long, Rational> terms_;
};

/// [x]_q^n = (1-q)^{-n} sum_l C(n,l) (-1)^l q^{l x}.
CharacterSum monomial_characters(unsigned n, const QParam& q);
/// [x]_{q^{-1}}^n written in base q.
CharacterSum inverse_monomial_characters(unsigned n, const QParam& q);

/// A derivative held as (scalar in L) x (character sum).
struct Derivative {
  LogLaurent scalar;
  CharacterSum characters;
};

/// d/dx sum_l c_l q^{l x} = L * sum_l l c_l q^{l x}.
Derivative derivative(const CharacterSum& f);

/// d/dx [x]_q^n = n L/(q-1) * q^x [x]_q^{n-1}, for n >= 1.
Derivative monomial_derivative(unsigned n, const QParam& q);

}  // namespace qbern
