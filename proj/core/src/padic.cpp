#include "qbern/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbern {

namespace {

// Exact rationals above this size are not remembered; arithmetic on them
// falls back to digit arithmetic.
constexpr std::size_t kExactBitCap = 8192;

BigInt invert(const BigInt& a, const BigInt& mod) {
  BigInt out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::domain_error("residue is not invertible");
  }
  return out;
}

BigInt reduce(const BigInt& a, const BigInt& mod) {
  BigInt out;
  mpz_mod(out.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
  return out;
}

// Unit part of r / p^v modulo p^digits.
BigInt unit_residue(const Rational& r, long v, long digits, std::uint64_t p) {
  BigInt num = r.get_num();
  BigInt den = r.get_den();
  if (v > 0) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pow(p, static_cast<unsigned long>(v)).get_mpz_t());
  } else if (v < 0) {
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pow(p, static_cast<unsigned long>(-v)).get_mpz_t());
  }
  const BigInt mod = pow(p, static_cast<unsigned long>(digits));
  return reduce(reduce(num, mod) * invert(reduce(den, mod), mod), mod);
}

void require_same_context(const PadicNumber& a, const PadicNumber& b) {
  if (!(a.context() == b.context())) throw std::invalid_argument("p-adic context mismatch");
}

long floor_log(std::uint64_t p, long k) {
  long out = 0;
  for (long t = k; t >= static_cast<long>(p); t /= static_cast<long>(p)) ++out;
  return out;
}

std::optional<Rational> remember(const Rational& r) {
  if (bit_size(r) > kExactBitCap) return std::nullopt;
  return r;
}

}  // namespace

PadicContext::PadicContext(std::uint64_t p, int precision) : p_(p), precision_(precision) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (precision < kMinPrecision) {
    throw std::invalid_argument("p-adic precision must be at least " + std::to_string(kMinPrecision));
  }
}

BigInt PadicContext::power(long digits) const { return pow(p_, static_cast<unsigned long>(digits)); }

PadicNumber PadicNumber::zero(const PadicContext& ctx) { return PadicNumber(ctx); }

PadicNumber PadicNumber::big_oh(long absolute_precision, const PadicContext& ctx) {
  PadicNumber out(ctx);
  out.state_ = State::kBigOh;
  out.valuation_ = absolute_precision;
  return out;
}

PadicNumber PadicNumber::make(const PadicContext& ctx, long valuation, int digits, BigInt unit) {
  PadicNumber out(ctx);
  out.state_ = State::kNonzero;
  out.valuation_ = valuation;
  out.digits_ = std::min(digits, ctx.precision());
  out.unit_ = reduce(unit, ctx.power(out.digits_));
  return out;
}

PadicNumber PadicNumber::from_rational(const Rational& r, const PadicContext& ctx) {
  if (r == 0) return zero(ctx);
  const long v = qbern::valuation(r, ctx.prime());
  PadicNumber out = make(ctx, v, ctx.precision(), unit_residue(r, v, ctx.precision(), ctx.prime()));
  out.exact_ = remember(r);
  return out;
}

PadicNumber PadicNumber::from_residue(const BigInt& residue, long absolute_precision, const PadicContext& ctx) {
  const BigInt r = reduce(residue, ctx.power(absolute_precision));
  if (r == 0) return big_oh(absolute_precision, ctx);
  const long v = qbern::valuation(r, ctx.prime());
  BigInt unit;
  mpz_divexact(unit.get_mpz_t(), r.get_mpz_t(), ctx.power(v).get_mpz_t());
  return make(ctx, v, static_cast<int>(std::min<long>(absolute_precision - v, ctx.precision())), unit);
}

long PadicNumber::absolute_precision() const noexcept {
  if (is_exact()) return kInfiniteValuation;
  if (state_ == State::kBigOh) return valuation_;
  return valuation_ + digits_;
}

BigInt PadicNumber::unit_to(long digits) const {
  if (exact_) return unit_residue(*exact_, valuation_, digits, ctx_.prime());
  if (digits >= digits_) return unit_;
  return reduce(unit_, ctx_.power(digits));
}

std::vector<unsigned long> PadicNumber::digits() const {
  std::vector<unsigned long> out;
  BigInt rest = unit_;
  for (int i = 0; i < digits_; ++i) {
    out.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), ctx_.prime()));
  }
  return out;
}

PadicNumber PadicNumber::approximate() const {
  PadicNumber out = *this;
  out.exact_.reset();
  return out;
}

PadicNumber PadicNumber::with_context(const PadicContext& ctx) const {
  if (ctx.prime() != ctx_.prime()) throw std::invalid_argument("cannot change the prime of a p-adic number");
  switch (state_) {
    case State::kExactZero:
      return zero(ctx);
    case State::kBigOh:
      return big_oh(valuation_, ctx);
    case State::kNonzero:
      break;
  }
  if (exact_) return from_rational(*exact_, ctx);
  const int d = std::min(digits_, ctx.precision());
  return make(ctx, valuation_, d, unit_);
}

std::string PadicNumber::to_string() const {
  const std::string p = std::to_string(ctx_.prime());
  switch (state_) {
    case State::kExactZero:
      return "0 (exact)";
    case State::kBigOh:
      return "O(" + p + "^" + std::to_string(valuation_) + ")";
    case State::kNonzero:
      break;
  }
  return p + "^" + std::to_string(valuation_) + " * " + unit_.get_str() + " (mod " + p + "^" +
         std::to_string(digits_) + ")";
}

PadicNumber PadicNumber::operator-() const {
  if (exact_) return from_rational(-*exact_, ctx_);
  if (state_ != State::kNonzero) return *this;
  return make(ctx_, valuation_, digits_, ctx_.power(digits_) - unit_);
}

PadicNumber PadicNumber::add_approximate(const PadicNumber& a, const PadicNumber& b) {
  const PadicContext& ctx = a.ctx_;
  const long abs = std::min(a.absolute_precision(), b.absolute_precision());
  const long low = std::min(a.valuation_, b.valuation_);
  if (abs <= low) return big_oh(abs, ctx);
  const long span = abs - low;
  BigInt sum = 0;
  for (const PadicNumber* x : {&a, &b}) {
    if (x->state_ != State::kNonzero) continue;
    const long shift = x->valuation_ - low;
    if (shift >= span) continue;
    sum += x->unit_to(span - shift) * ctx.power(shift);
  }
  sum = reduce(sum, ctx.power(span));
  if (sum == 0) return big_oh(abs, ctx);
  const long e = qbern::valuation(sum, ctx.prime());
  BigInt unit;
  mpz_divexact(unit.get_mpz_t(), sum.get_mpz_t(), ctx.power(e).get_mpz_t());
  const long v = low + e;
  return make(ctx, v, static_cast<int>(std::min<long>(abs - v, ctx.precision())), unit);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  require_same_context(a, b);
  if (a.exact_ && b.exact_) return PadicNumber::from_rational(*a.exact_ + *b.exact_, a.ctx_);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  return PadicNumber::add_approximate(a, b);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  using State = PadicNumber::State;
  require_same_context(a, b);
  const PadicContext& ctx = a.ctx_;
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicNumber::zero(ctx);
  if (a.exact_ && b.exact_) return PadicNumber::from_rational(*a.exact_ * *b.exact_, ctx);
  if (a.state_ == State::kBigOh || b.state_ == State::kBigOh) {
    return PadicNumber::big_oh(a.valuation_ + b.valuation_, ctx);
  }
  const int d = a.exact_ ? b.digits_ : (b.exact_ ? a.digits_ : std::min(a.digits_, b.digits_));
  return PadicNumber::make(ctx, a.valuation_ + b.valuation_, d, a.unit_to(d) * b.unit_to(d));
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  using State = PadicNumber::State;
  require_same_context(a, b);
  const PadicContext& ctx = a.ctx_;
  if (b.is_exact_zero()) throw std::domain_error("division by exact zero");
  if (b.state_ == State::kBigOh) throw std::domain_error("division by a value indistinguishable from zero");
  if (a.is_exact_zero()) return PadicNumber::zero(ctx);
  if (a.exact_ && b.exact_) return PadicNumber::from_rational(*a.exact_ / *b.exact_, ctx);
  if (a.state_ == State::kBigOh) return PadicNumber::big_oh(a.valuation_ - b.valuation_, ctx);
  const int d = a.exact_ ? b.digits_ : (b.exact_ ? a.digits_ : std::min(a.digits_, b.digits_));
  const BigInt mod = ctx.power(d);
  return PadicNumber::make(ctx, a.valuation_ - b.valuation_, d, a.unit_to(d) * invert(b.unit_to(d), mod));
}

PadicNumber PadicNumber::pow(long exponent) const {
  if (exponent < 0) return from_integer(1, ctx_) / pow(-exponent);
  PadicNumber result = from_integer(1, ctx_);
  PadicNumber base = *this;
  for (long e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

long agreement(const PadicNumber& a, const PadicNumber& b) { return (a - b).valuation(); }

long log_series_length(std::uint64_t p, long v, int precision) {
  long k = 1;
  while (k * v - floor_log(p, k) < precision + v) ++k;
  return k;
}

PadicNumber padic_log(const PadicNumber& u) {
  const PadicContext& ctx = u.context();
  const std::uint64_t p = ctx.prime();
  const long required = p == 2 ? 2 : 1;
  if (u.is_zero()) throw std::domain_error("log domain: |1-q|_p too large");
  const PadicNumber x = u - PadicNumber::from_integer(1, ctx);
  if (x.is_exact_zero()) return PadicNumber::zero(ctx);
  if (x.is_zero()) {
    if (x.valuation() >= required) return PadicNumber::big_oh(x.valuation(), ctx);
    throw std::domain_error("log domain: |1-q|_p too large");
  }
  const long v = x.valuation();
  if (v < required) throw std::domain_error("log domain: |1-q|_p too large");

  const long terms = log_series_length(p, v, ctx.precision());
  const PadicContext work = ctx.with_precision(ctx.precision() + static_cast<int>(floor_log(p, terms)) + 2);
  const PadicNumber xw = x.with_context(work).approximate();

  PadicNumber sum = PadicNumber::zero(work);
  PadicNumber power = xw;
  for (long k = 1; k < terms; ++k) {
    const PadicNumber term = power / PadicNumber::from_integer(k, work);
    sum = (k % 2 == 1) ? sum + term : sum - term;
    power *= xw;
  }
  return sum.with_context(ctx);
}

}  // namespace qbern
