#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbern/log_laurent.hpp"
#include "qbern/q_calculus.hpp"
#include "qbern/rational.hpp"

namespace qbern {

enum class BetaKind { kClassical, kCarlitz, kModified, kModifiedInverseQ };

std::string_view to_string(BetaKind kind);
/// "classical", "carlitz", "modified", "modified-inverse-q"; throws std::invalid_argument otherwise.
BetaKind parse_beta_kind(std::string_view name);

/// Memoized table of one Bernoulli family, filled by its umbral recurrence.
/// Built by a single writer through extend_to(); read-only afterwards.
///
///   classical:  B_0 = 1, (B + 1)^n - B_n = [n == 1]
///   carlitz:    beta_0 = 1, q (q beta + 1)^n - beta_n = [n == 1]
///   modified:   b_0 = 1, (q b + 1)^n - b_n = [n == 1] L/(q - 1)
///   modified-inverse-q: the modified family at q^{-1}, rewritten with
///                       log(q^{-1}) = -L so it shares the symbol of base q.
class BetaTable {
 public:
  static BetaTable classical();
  /// Throws std::invalid_argument for kClassical (use classical()).
  BetaTable(BetaKind kind, const QParam& q);

  BetaKind kind() const noexcept { return kind_; }
  const std::optional<QParam>& q() const noexcept { return q_; }
  unsigned size() const noexcept { return static_cast<unsigned>(symbolic_.size()); }

  BetaTable& extend_to(unsigned n);

  /// Value as an element of Q[L, 1/L]; valid for every kind. Throws
  /// std::out_of_range when n has not been built.
  const LogLaurent& symbolic(unsigned n) const;
  /// Classical and Carlitz values only.
  const Rational& rational(unsigned n) const;

 private:
  BetaTable(BetaKind kind, std::optional<QParam> q, int);
  void push_next();

  BetaKind kind_;
  std::optional<QParam> q_;
  std::vector<Rational> rational_;
  std::vector<LogLaurent> symbolic_;
  std::vector<Rational> q_powers_;
};

Rational classical_bernoulli(unsigned n);
Rational carlitz_beta(unsigned n, const QParam& q);
LogLaurent modified_beta(unsigned n, const QParam& q);
LogLaurent modified_beta_inverse_q(unsigned n, const QParam& q);

/// Closed form L/(1-q)^{n+1} sum_{l=0}^n C(n,l) (-1)^{l-1} l/[l]_q, where the
/// l = 0 summand 0/0 is taken as its limit and contributes 1/(1-q)^n.
LogLaurent modified_beta_closed(unsigned n, const QParam& q);

}  // namespace qbern
