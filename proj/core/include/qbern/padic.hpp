#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qbern/rational.hpp"

namespace qbern {

inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/// Prime and relative precision (number of significant base-p digits).
class PadicContext {
 public:
  static constexpr int kMinPrecision = 4;

  /// Throws std::invalid_argument unless p is prime and precision >= 4.
  PadicContext(std::uint64_t p, int precision);

  std::uint64_t prime() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }
  PadicContext with_precision(int precision) const { return PadicContext(p_, precision); }

  /// p^digits
  BigInt power(long digits) const;

  friend bool operator==(const PadicContext&, const PadicContext&) = default;

 private:
  std::uint64_t p_;
  int precision_;
};

/// Element of Q_p known to finite relative precision: p^v * u with u a unit
/// known modulo p^d (d <= context precision).
///
/// Three states:
///  - exact zero (valuation +inf), produced only by exact cancellation;
///  - O(p^k): indistinguishable from zero at absolute precision k;
///  - nonzero with valuation v and d >= 1 significant digits.
///
/// Values embedded from rationals remember the rational, so arithmetic
/// between exact operands stays exact and re-embeds at full precision.
class PadicNumber {
 public:
  static PadicNumber zero(const PadicContext& ctx);
  static PadicNumber from_rational(const Rational& r, const PadicContext& ctx);
  static PadicNumber from_integer(long value, const PadicContext& ctx) { return from_rational(Rational(value), ctx); }
  /// An integer known only modulo p^absolute_precision.
  static PadicNumber from_residue(const BigInt& residue, long absolute_precision, const PadicContext& ctx);
  static PadicNumber big_oh(long absolute_precision, const PadicContext& ctx);

  const PadicContext& context() const noexcept { return ctx_; }

  bool is_exact_zero() const noexcept { return state_ == State::kExactZero; }
  /// Exact zero or O(p^k).
  bool is_zero() const noexcept { return state_ != State::kNonzero; }
  bool is_exact() const noexcept { return exact_.has_value() || is_exact_zero(); }

  /// +inf for exact zero, the lower bound k for O(p^k).
  long valuation() const noexcept { return valuation_; }
  int relative_precision() const noexcept { return digits_; }
  /// valuation + relative precision; +inf for exactly known values.
  long absolute_precision() const noexcept;
  const BigInt& unit() const noexcept { return unit_; }
  const std::optional<Rational>& exact_value() const noexcept { return exact_; }

  /// Unit digits, least significant first.
  std::vector<unsigned long> digits() const;

  /// Same value with the remembered rational dropped.
  PadicNumber approximate() const;
  /// Same value in another context with the same prime. Exact values
  /// re-embed; approximate ones keep at most the new precision.
  PadicNumber with_context(const PadicContext& ctx) const;

  /// "p^v * u (mod p^d)", "O(p^k)" or "0 (exact)".
  std::string to_string() const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  PadicNumber& operator+=(const PadicNumber& b) { return *this = *this + b; }
  PadicNumber& operator-=(const PadicNumber& b) { return *this = *this - b; }
  PadicNumber& operator*=(const PadicNumber& b) { return *this = *this * b; }
  PadicNumber& operator/=(const PadicNumber& b) { return *this = *this / b; }

  /// Repeated squaring; negative exponents divide.
  PadicNumber pow(long exponent) const;

 private:
  enum class State { kExactZero, kBigOh, kNonzero };

  explicit PadicNumber(const PadicContext& ctx) : ctx_(ctx) {}

  static PadicNumber make(const PadicContext& ctx, long valuation, int digits, BigInt unit);
  static PadicNumber add_approximate(const PadicNumber& a, const PadicNumber& b);
  BigInt unit_to(long digits) const;

  PadicContext ctx_;
  State state_ = State::kExactZero;
  long valuation_ = kInfiniteValuation;
  int digits_ = 0;
  BigInt unit_ = 0;
  std::optional<Rational> exact_;
};

/// v_p(a - b): how many absolute digits agree. +inf when the difference is exactly zero.
long agreement(const PadicNumber& a, const PadicNumber& b);

/// Power series log(1 + x) = sum (-1)^{k+1} x^k / k for x = u - 1.
/// Requires v_p(u - 1) >= 1 (>= 2 for p = 2); otherwise throws
/// std::domain_error("log domain: |1-q|_p too large").
PadicNumber padic_log(const PadicNumber& u);

/// Number of series terms used for a given v_p(u - 1) and precision:
/// the smallest k with k*v - floor(log_p k) >= M + v.
long log_series_length(std::uint64_t p, long v, int precision);

}  // namespace qbern
