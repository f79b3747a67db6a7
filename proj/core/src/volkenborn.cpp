#include "qbern/volkenborn.hpp"

#include <algorithm>
#include <stdexcept>

#include "qbern/bernoulli.hpp"
#include "qbern/errors.hpp"
#include "qbern/residue_ring.hpp"

namespace qbern {

namespace {

std::uint64_t level_size(std::uint64_t p, int level) {
  std::uint64_t size = 1;
  for (int i = 0; i < level; ++i) {
    if (size > (std::uint64_t{1} << 40) / p) throw ResourceError("p^N overflows the enumeration range");
    size *= p;
  }
  return size;
}

std::size_t bits_of(const Rational& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

long max_abs_exponent(const CharacterSum& f) {
  long out = 0;
  for (const auto& [l, c] : f.terms()) out = std::max(out, l < 0 ? -l : l);
  return out;
}

Rational geometric_exact(const CharacterSum& f, const Rational& q, std::uint64_t size) {
  Rational sum = 0;
  for (const auto& [l, c] : f.terms()) {
    if (l == 0) {
      sum += c * Rational(static_cast<unsigned long>(size));
      continue;
    }
    const Rational ql = pow(q, l);
    sum += c * (pow(ql, static_cast<long>(size)) - 1) / (ql - 1);
  }
  return sum / Rational(static_cast<unsigned long>(size));
}

// sum_{x < P} q^{l x} = (q^{l P} - 1)/(q^l - 1) in Q_p, carried to `work`
// relative precision. The numerator has valuation v_p(q^l - 1) + N.
PadicNumber geometric_character(long l, const Rational& q, int level, std::uint64_t size, const PadicContext& work) {
  const std::uint64_t p = work.prime();
  if (l == 0) return PadicNumber::from_rational(Rational(static_cast<unsigned long>(size)), work);
  const Rational denom = pow(q, l) - 1;
  const long absolute = work.precision() + valuation(denom, p) + level;
  const BigInt modulus = work.power(absolute);
  BigInt num, den, base;
  mpz_mod(num.get_mpz_t(), q.get_num_mpz_t(), modulus.get_mpz_t());
  mpz_mod(den.get_mpz_t(), q.get_den_mpz_t(), modulus.get_mpz_t());
  if (l > 0) {
    mpz_invert(den.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    base = num * den;
  } else {
    mpz_invert(num.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
    base = den * num;
  }
  const BigInt exponent = BigInt(static_cast<unsigned long>(l < 0 ? -l : l)) * static_cast<unsigned long>(size);
  BigInt powered;
  mpz_powm(powered.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return PadicNumber::from_residue(powered - 1, absolute, work) / PadicNumber::from_rational(denom, work);
}

PadicNumber geometric_modular(const CharacterSum& f, const Rational& q, int level, std::uint64_t size,
                              const PadicContext& ctx) {
  const std::uint64_t p = ctx.prime();
  long deficit = 0;
  for (const auto& [l, c] : f.terms()) deficit = std::max(deficit, -valuation(c, p));
  constexpr int kMaxGuard = 512;
  int guard = static_cast<int>(std::min<long>(kMaxGuard, 4 + deficit));
  for (;;) {
    const PadicContext work = ctx.with_precision(ctx.precision() + guard);
    PadicNumber sum = PadicNumber::zero(work);
    for (const auto& [l, c] : f.terms()) {
      sum += PadicNumber::from_rational(c, work) * geometric_character(l, q, level, size, work);
    }
    sum /= PadicNumber::from_rational(Rational(static_cast<unsigned long>(size)), work);
    const int have = sum.is_zero() ? 0 : sum.relative_precision();
    if (have >= ctx.precision() || guard >= kMaxGuard) return sum.approximate().with_context(ctx);
    guard = std::min(kMaxGuard, guard + std::max(4, ctx.precision() - have + 2));
  }
}

Rational enumerate_exact(const CharacterSum& f, const Rational& q, std::uint64_t size) {
  std::vector<Rational> step;
  std::vector<Rational> current;
  std::vector<Rational> coeff;
  for (const auto& [l, c] : f.terms()) {
    step.push_back(pow(q, l));
    current.emplace_back(1);
    coeff.push_back(c);
  }
  Rational sum = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    for (std::size_t i = 0; i < step.size(); ++i) {
      sum += coeff[i] * current[i];
      current[i] *= step[i];
    }
  }
  return sum / Rational(static_cast<unsigned long>(size));
}

}  // namespace

RiemannSumResult riemann_sum(const CharacterSum& f, const QParam& q, int level, SumMethod method,
                             const CostLimits& limits) {
  if (level < 0) throw std::invalid_argument("Riemann level must be nonnegative");
  const PadicContext& ctx = q.context();
  const std::uint64_t size = level_size(ctx.prime(), level);
  const std::size_t estimated_bits = static_cast<std::size_t>(max_abs_exponent(f)) * size * bits_of(q.value());
  const bool exact_fits = estimated_bits <= limits.max_exact_bits;

  if (method == SumMethod::kEnumeration) {
    if (size > limits.max_points || !exact_fits) {
      throw ResourceError("enumeration of p^" + std::to_string(level) + " points exceeds the cost cap");
    }
    Rational exact = enumerate_exact(f, q.value(), size);
    PadicNumber value = PadicNumber::from_rational(exact, ctx);
    return {level, method, std::move(exact), std::move(value)};
  }
  if (exact_fits) {
    Rational exact = geometric_exact(f, q.value(), size);
    PadicNumber value = PadicNumber::from_rational(exact, ctx);
    return {level, method, std::move(exact), std::move(value)};
  }
  return {level, method, std::nullopt, geometric_modular(f, q.value(), level, size, ctx)};
}

LogLaurent character_integral(long l, const Rational& q) {
  if (l == 0) return LogLaurent(Rational(1));
  return LogLaurent::monomial(Rational(l) / (pow(q, l) - 1), 1);
}

LogLaurent integrate(const CharacterSum& f, const Rational& q) {
  LogLaurent out;
  for (const auto& [l, c] : f.terms()) out += LogLaurent(c) * character_integral(l, q);
  return out;
}

LogLaurent monomial_integral(unsigned n, const QParam& q) { return integrate(monomial_characters(n, q), q.value()); }

LogLaurent weighted_monomial_integral_direct(unsigned r, unsigned l, const QParam& q) {
  return integrate(monomial_characters(r, q).shifted(static_cast<long>(l)), q.value());
}

namespace {

LogLaurent weighted_binomial(unsigned r, unsigned l, const Rational& q, const BetaTable& betas) {
  LogLaurent out;
  Rational qm1_power = 1;
  for (unsigned k = 0; k <= l; ++k) {
    out += LogLaurent(binomial(l, k) * qm1_power) * betas.symbolic(r + k);
    qm1_power *= q - 1;
  }
  return out;
}

}  // namespace

LogLaurent weighted_monomial_integral_binomial(unsigned r, unsigned l, const QParam& q) {
  BetaTable betas(BetaKind::kModified, q);
  betas.extend_to(r + l);
  return weighted_binomial(r, l, q.value(), betas);
}

LogLaurent weighted_monomial_integral(unsigned r, unsigned l, const QParam& q) {
  LogLaurent direct = weighted_monomial_integral_direct(r, l, q);
  if (!(direct == weighted_monomial_integral_binomial(r, l, q))) {
    throw std::logic_error("weighted monomial integral: character and binomial routes disagree");
  }
  return direct;
}

LogLaurent double_integral(unsigned m, unsigned n, const QParam& q) {
  const Rational& qv = q.value();
  BetaTable betas(BetaKind::kModified, q);
  betas.extend_to(n);
  BetaTable inverse_betas(BetaKind::kModifiedInverseQ, q);
  inverse_betas.extend_to(m + n);
  LogLaurent out;
  for (unsigned l = 0; l <= n; ++l) {
    const Rational scale = binomial(n, l) * (l % 2 == 0 ? 1 : -1) / pow(qv, static_cast<long>(l));
    out += LogLaurent(scale) * inverse_betas.symbolic(m + l) * weighted_binomial(n - l, l, qv, betas);
  }
  return out;
}

LogLaurent double_integral_characters(unsigned m, unsigned n, const QParam& q) {
  const Rational& qv = q.value();
  const CharacterSum f = inverse_monomial_characters(m, q);
  const CharacterSum g = monomial_characters(n, q);
  LogLaurent out;
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      out += LogLaurent(ca * cb) * character_integral(a - b, qv) * character_integral(b, qv);
    }
  }
  return out;
}

PadicNumber double_riemann_sum(BracketPower f, BracketPower g, const QParam& q, int level, const CostLimits& limits) {
  const PadicContext& ctx = q.context();
  const std::uint64_t p = ctx.prime();
  const std::uint64_t size = level_size(p, level);
  if (size > limits.max_points || size * size > limits.max_operations) {
    throw ResourceError("double Riemann sum at level " + std::to_string(level) + " exceeds the cost cap");
  }
  const int digits = std::min(ResidueRing::max_digits(p), ctx.precision() + 2 * level + 4);
  const ResidueRing ring(p, digits);
  const Rational f_base = f.inverse_base ? 1 / q.value() : q.value();
  const Rational g_base = g.inverse_base ? 1 / q.value() : q.value();

  const std::vector<std::uint64_t> fx = bracket_power_table(ring, f_base, f.power, size);
  // g(y) for y = -(size-1) .. size-1; [-k]_b = -b^{-k} [k]_b.
  const std::vector<std::uint64_t> brackets = bracket_power_table(ring, g_base, 1, size);
  const std::vector<std::uint64_t> inverse_powers = power_table(ring, 1 / g_base, size);
  std::vector<std::uint64_t> gy(2 * size - 1);
  for (std::uint64_t k = 0; k < size; ++k) {
    gy[size - 1 + k] = ring.pow(brackets[k], g.power);
    gy[size - 1 - k] = ring.pow(ring.neg(ring.mul(inverse_powers[k], brackets[k])), g.power);
  }

  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    std::uint64_t inner = 0;
    for (std::uint64_t z = 0; z < size; ++z) inner = ring.add(inner, gy[size - 1 + z - x]);
    total = ring.add(total, ring.mul(fx[x], inner));
  }
  const Rational area = Rational(static_cast<unsigned long>(size)) * Rational(static_cast<unsigned long>(size));
  return PadicNumber::from_residue(BigInt(static_cast<unsigned long>(total)), digits, ctx) /
         PadicNumber::from_rational(area, ctx);
}

ConvergenceProfile convergence_profile(const CharacterSum& f, const QParam& q, int first_level, int last_level,
                                       const CostLimits& limits) {
  if (first_level < 0 || last_level <= first_level) throw std::invalid_argument("need 0 <= first < last level");
  std::vector<int> levels;
  std::vector<PadicNumber> values;
  std::vector<long> deltas;
  for (int n = first_level; n <= last_level; ++n) {
    levels.push_back(n);
    values.push_back(riemann_sum(f, q, n, SumMethod::kGeometric, limits).value);
    if (values.size() > 1) deltas.push_back(agreement(values.back(), values[values.size() - 2]));
  }
  const long digits = deltas.back();
  return {std::move(levels), values, std::move(deltas), values.back(), digits};
}

}  // namespace qbern
