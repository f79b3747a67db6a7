#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qbern/padic.hpp"
#include "qbern/rational.hpp"
#include "qbern/real.hpp"

namespace qbern {

/// Laurent polynomial sum_d c_d L^d in a formal symbol L standing for log q.
/// L is treated as transcendental over Q, so equality here is coefficient-wise.
class LogLaurent {
 public:
  LogLaurent() = default;
  LogLaurent(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LogLaurent(long constant) : LogLaurent(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  /// c * L^degree
  static LogLaurent monomial(const Rational& c, int degree);
  /// The symbol L itself.
  static LogLaurent log_symbol() { return monomial(Rational(1), 1); }

  const std::map<int, Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(int degree) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree range of the support; both throw on the zero element.
  int min_degree() const;
  int max_degree() const;

  LogLaurent operator-() const;
  LogLaurent& operator+=(const LogLaurent& b);
  LogLaurent& operator-=(const LogLaurent& b);
  LogLaurent& operator*=(const LogLaurent& b) { return *this = *this * b; }
  friend LogLaurent operator+(LogLaurent a, const LogLaurent& b) { return a += b; }
  friend LogLaurent operator-(LogLaurent a, const LogLaurent& b) { return a -= b; }
  friend LogLaurent operator*(const LogLaurent& a, const LogLaurent& b);
  friend bool operator==(const LogLaurent& a, const LogLaurent& b) { return a.coeffs_ == b.coeffs_; }

  /// Substitutes L -> -L, i.e. rewrites a value stated in log(q^{-1}) in terms of log q.
  LogLaurent negate_log() const;

  /// "c_{-1}·L^-1 + c_0 + c_1·L + c_2·L^2", zero terms omitted, "0" for zero.
  std::string to_string() const;

 private:
  void prune();

  std::map<int, Rational> coeffs_;
};

/// Evaluation at a numeric value of L. Throws std::domain_error when L is
/// (indistinguishable from) zero and negative degrees are present.
PadicNumber evaluate(const LogLaurent& a, const PadicNumber& log_value);
Real evaluate(const LogLaurent& a, const Real& log_value);

/// Evaluates at L = log_p(q), raising the working precision of log q until
/// the result carries the full precision of ctx (coefficients here often
/// carry large negative valuations that cancel).
PadicNumber evaluate_at_log(const LogLaurent& a, const Rational& q, const PadicContext& ctx);

}  // namespace qbern
