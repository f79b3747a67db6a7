#include "qbern/convolution.hpp"

#include <algorithm>

#include "qbern/bernoulli.hpp"
#include "qbern/errors.hpp"

namespace qbern {

namespace {

std::uint64_t level_points(std::uint64_t p, int level, const CostLimits& limits) {
  std::uint64_t size = 1;
  for (int i = 0; i < level; ++i) {
    if (size > limits.max_points / p) {
      throw ResourceError("level " + std::to_string(level) + " exceeds the point cap for p = " + std::to_string(p));
    }
    size *= p;
  }
  return size;
}

void add_common_parameters(IdentityReport& r, unsigned m, unsigned n, const QParam& q, int level) {
  r.parameters = {{"m", std::to_string(m)},
                  {"n", std::to_string(n)},
                  {"p", std::to_string(q.prime())},
                  {"q", to_string(q.value())},
                  {"N", std::to_string(level)},
                  {"M", std::to_string(q.context().precision())}};
}

long saturating_add(long a, long b) {
  if (a == kInfiniteValuation || b == kInfiniteValuation) return kInfiniteValuation;
  return a + b;
}

long minus_one(long a) { return a == kInfiniteValuation ? a : a - 1; }

}  // namespace

std::uint64_t discrete_convolution(const ResidueRing& ring, std::span<const std::uint64_t> f,
                                   std::span<const std::uint64_t> g, std::size_t n) {
  if (f.size() <= n || g.size() <= n) throw std::invalid_argument("discrete_convolution: sequences shorter than n + 1");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i <= n; ++i) sum = ring.add(sum, ring.mul(f[i], g[n - i]));
  return sum;
}

LogLaurent star_convolution(const CharacterSum& f, const CharacterSum& g, long z, const Rational& q) {
  if (z < 0) throw std::invalid_argument("star_convolution: z must be a nonnegative integer");
  // f(x) g(z - x) = sum c_a d_b q^{b z} q^{(a - b) x}
  LogLaurent integral_term;
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, db] : g.terms()) {
      integral_term += LogLaurent(ca * db * pow(q, b * z)) * character_integral(a - b, q);
    }
  }
  const Derivative dg = derivative(g);
  Rational conv = 0;
  for (long i = 0; i <= z; ++i) conv += f.evaluate(i, q) * dg.characters.evaluate(z - i, q);
  return integral_term - dg.scalar * LogLaurent(conv);
}

LogLaurent star_convolution_value(unsigned m, unsigned n, const QParam& q, long z) {
  return star_convolution(inverse_monomial_characters(m, q), monomial_characters(n, q), z, q.value());
}

PadicNumber star_convolution_riemann(unsigned m, unsigned n, const QParam& q, long z, int level,
                                     const CostLimits& limits) {
  const PadicContext& ctx = q.context();
  const std::uint64_t size = level_points(ctx.prime(), level, limits);
  const Rational& qv = q.value();
  const Rational qinv = 1 / qv;
  Rational sum = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    const long xi = static_cast<long>(x);
    sum += pow(q_bracket(xi, qinv), m) * pow(q_bracket(z - xi, qv), n);
  }
  const PadicNumber integral = PadicNumber::from_rational(sum / Rational(static_cast<unsigned long>(size)), ctx);

  const CharacterSum f = inverse_monomial_characters(m, q);
  const Derivative dg = derivative(monomial_characters(n, q));
  Rational conv = 0;
  for (long i = 0; i <= z; ++i) conv += f.evaluate(i, qv) * dg.characters.evaluate(z - i, qv);
  return integral - evaluate_at_log(dg.scalar * LogLaurent(conv), qv, ctx);
}

PadicNumber convolution_riemann_sum(unsigned m, unsigned power, unsigned shift, const QParam& q, int level,
                                    DirectMethod method, const CostLimits& limits) {
  const PadicContext& ctx = q.context();
  const std::uint64_t p = ctx.prime();
  const std::uint64_t size = level_points(p, level, limits);
  if (method == DirectMethod::kConvolution && size * (size + 1) / 2 > limits.max_operations) {
    throw ResourceError("O(p^2N) convolution sum at level " + std::to_string(level) + " exceeds the cost cap");
  }
  const int digits = ResidueRing::max_digits(p);
  const ResidueRing ring(p, digits);
  const std::vector<std::uint64_t> f = bracket_power_table(ring, 1 / q.value(), m, size);
  std::vector<std::uint64_t> g = bracket_power_table(ring, q.value(), power, size);
  if (shift != 0) {
    const std::vector<std::uint64_t> qpow = power_table(ring, pow(q.value(), static_cast<long>(shift)), size);
    for (std::uint64_t j = 0; j < size; ++j) g[j] = ring.mul(g[j], qpow[j]);
  }

  std::uint64_t total = 0;
  if (method == DirectMethod::kConvolution) {
    for (std::uint64_t z = 0; z < size; ++z) total = ring.add(total, discrete_convolution(ring, f, g, z));
  } else {
    std::vector<std::uint64_t> prefix(size);
    std::uint64_t running = 0;
    for (std::uint64_t j = 0; j < size; ++j) prefix[j] = running = ring.add(running, g[j]);
    for (std::uint64_t i = 0; i < size; ++i) total = ring.add(total, ring.mul(f[i], prefix[size - 1 - i]));
  }
  return PadicNumber::from_residue(BigInt(static_cast<unsigned long>(total)), digits, ctx) /
         PadicNumber::from_rational(Rational(static_cast<unsigned long>(size)), ctx);
}

StabilizedValue convolution_integral(unsigned m, unsigned power, unsigned shift, const QParam& q, int level,
                                     const DirectOptions& options) {
  std::vector<int> levels{level};
  std::vector<long> deltas;
  PadicNumber previous = convolution_riemann_sum(m, power, shift, q, level, options.method, options.limits);
  for (int n = level + 1; n <= options.max_level; ++n) {
    PadicNumber current = PadicNumber::zero(q.context());
    try {
      current = convolution_riemann_sum(m, power, shift, q, n, options.method, options.limits);
    } catch (const ResourceError& e) {
      throw InsufficientPrecision("Riemann sums did not stabilize before the cost cap: " + std::string(e.what()));
    }
    const long delta = agreement(current, previous);
    levels.push_back(n);
    deltas.push_back(delta);
    const long agreeing = delta == kInfiniteValuation ? kInfiniteValuation : delta - current.valuation();
    if (agreeing >= options.min_agreeing_digits) {
      return {std::move(current), n, delta, agreeing, std::move(levels), std::move(deltas)};
    }
    previous = std::move(current);
  }
  throw InsufficientPrecision("Riemann sums did not reach " + std::to_string(options.min_agreeing_digits) +
                              " agreeing digits by level " + std::to_string(options.max_level));
}

StabilizedValue a_direct(unsigned m, unsigned n, const QParam& q, int level, const DirectOptions& options) {
  if (n == 0) throw std::invalid_argument("A_{m,n} needs n >= 1");
  return convolution_integral(m, n - 1, 0, q, level, options);
}

LogLaurent a_closed(unsigned m, unsigned n, const QParam& q) {
  if (n == 0) throw std::invalid_argument("A_{m,n} needs n >= 1");
  const Rational& qv = q.value();
  BetaTable betas(BetaKind::kModified, q);
  betas.extend_to(n);
  BetaTable inverse_betas(BetaKind::kModifiedInverseQ, q);
  inverse_betas.extend_to(m + n);
  LogLaurent sum;
  for (unsigned l = 1; l <= n; ++l) {
    const Rational outer = binomial(n, l) * (l % 2 == 0 ? 1 : -1) / pow(qv, static_cast<long>(l));
    Rational qm1_power = 1;
    for (unsigned k = 0; k <= l; ++k) {
      const Rational c = outer * binomial(l, k) * qm1_power;
      sum += LogLaurent(c) * inverse_betas.symbolic(m + l) * betas.symbolic(n + k - l);
      qm1_power *= qv - 1;
    }
  }
  return LogLaurent::monomial((qv - 1) / static_cast<long>(n), -1) * sum;
}

std::string_view to_string(IndexConvention c) {
  return c == IndexConvention::kSame ? "same-index" : "shifted-index";
}

AmnValue amn_value(unsigned m, unsigned n, const QParam& q, int level, const DirectOptions& options) {
  StabilizedValue direct = a_direct(m, n, q, level, options);
  LogLaurent closed = a_closed(m, n, q);
  PadicNumber evaluated = evaluate_at_log(closed, q.value(), q.context());
  return {m, n, std::move(direct), std::move(closed), std::move(evaluated)};
}

namespace {

LogLaurent convolution_identity_rhs(unsigned m, unsigned n, const QParam& q) {
  return double_integral(m, n, q) - modified_beta_inverse_q(m, q) * modified_beta(n, q);
}

}  // namespace

IdentityReport convolution_identity_check(unsigned m, unsigned n, const QParam& q, int level, const DirectOptions& options) {
  if (n == 0) throw std::invalid_argument("convolution identity needs n >= 1");
  const Derivative dg = monomial_derivative(n, q);
  // dg.characters is q^x [x]_q^{n-1}: power n-1, shift 1.
  const StabilizedValue sv = convolution_integral(m, n - 1, 1, q, level, options);
  const PadicNumber scalar = evaluate_at_log(dg.scalar, q.value(), q.context());
  const PadicNumber lhs = scalar * sv.value;
  const PadicNumber rhs = evaluate_at_log(convolution_identity_rhs(m, n, q), q.value(), q.context());

  IdentityReport r;
  r.identity = "convolution_integral_identity";
  add_common_parameters(r, m, n, q, sv.level);
  const long trusted = saturating_add(scalar.valuation(), sv.trusted_precision);
  set_padic_outcome(r, lhs, rhs, minus_one(trusted));
  r.note = "left side I_0(f ⊛ g') with g' = n L/(q-1) q^x [x]_q^{n-1}; right side double integral minus I_0(f) I_0(g)";
  return r;
}

IdentityReport convolution_identity_printed_probe(unsigned m, unsigned n, const QParam& q, int level, const DirectOptions& options) {
  if (n == 0) throw std::invalid_argument("convolution identity needs n >= 1");
  const StabilizedValue sv = a_direct(m, n, q, level, options);
  const PadicNumber scalar = evaluate_at_log(LogLaurent::monomial(Rational(static_cast<long>(n)) / (q.value() - 1), 1),
                                             q.value(), q.context());
  const PadicNumber lhs = scalar * sv.value;
  const PadicNumber rhs = evaluate_at_log(convolution_identity_rhs(m, n, q), q.value(), q.context());

  IdentityReport r;
  r.identity = "convolution_integral_identity_printed_derivative";
  add_common_parameters(r, m, n, q, sv.level);
  set_padic_outcome(r, lhs, rhs, std::nullopt, true);
  r.note = "left side n L/(q-1) A_{m,n}, i.e. derivative taken as n L/(q-1) [x]_q^{n-1}";
  return r;
}

IdentityReport closed_form_check(unsigned m, unsigned n, const QParam& q, int level, IndexConvention convention,
                                 const DirectOptions& options) {
  const unsigned direct_n = convention == IndexConvention::kSame ? n : n + 1;
  const StabilizedValue sv = a_direct(m, direct_n, q, level, options);
  const PadicNumber closed = evaluate_at_log(a_closed(m, n, q), q.value(), q.context());

  IdentityReport r;
  r.identity = std::string("closed_form_") + std::string(to_string(convention));
  add_common_parameters(r, m, n, q, sv.level);
  set_padic_outcome(r, closed, sv.value, minus_one(sv.trusted_precision));
  r.note = "closed form at (m, n) against A_{m," + std::to_string(direct_n) + "}";
  return r;
}

IdentityReport closed_form_derivative_check(unsigned m, unsigned n, const QParam& q, int level,
                                            const DirectOptions& options) {
  if (n == 0) throw std::invalid_argument("A_{m,n} needs n >= 1");
  const StabilizedValue sv = convolution_integral(m, n - 1, 1, q, level, options);
  const PadicNumber closed = evaluate_at_log(a_closed(m, n, q), q.value(), q.context());

  IdentityReport r;
  r.identity = "closed_form_true_derivative";
  add_common_parameters(r, m, n, q, sv.level);
  set_padic_outcome(r, closed, sv.value, minus_one(sv.trusted_precision));
  r.note = "closed form against I_0([z]_{q^-1}^m ⊛ q^z [z]_q^{n-1})";
  return r;
}

ConventionResolution resolve_index_convention(unsigned max_m, unsigned max_n, const QParam& q, int level,
                                              const DirectOptions& options) {
  ConventionResolution out;
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned n = 1; n <= max_n; ++n) {
      out.same.push_back(closed_form_check(m, n, q, level, IndexConvention::kSame, options));
      out.shifted.push_back(closed_form_check(m, n, q, level, IndexConvention::kShifted, options));
    }
  }
  const auto all_pass = [](const std::vector<IdentityReport>& v) {
    return std::all_of(v.begin(), v.end(), [](const IdentityReport& r) { return r.verdict == Verdict::kPass; });
  };
  if (all_pass(out.same)) {
    out.winner = IndexConvention::kSame;
  } else if (all_pass(out.shifted)) {
    out.winner = IndexConvention::kShifted;
  }
  return out;
}

std::vector<IdentityReport> symmetry_report(unsigned m, unsigned n, const QParam& q, int level,
                                            const DirectOptions& options) {
  if (n == 0) throw std::invalid_argument("symmetry needs n >= 1");
  const StabilizedValue x = a_direct(m, n, q, level, options);
  const StabilizedValue y = a_direct(n - 1, m + 1, q, level, options);
  const StabilizedValue z = a_direct(n - 1, m + 1, q.inverse(), level, options);

  IdentityReport inverse_q;
  inverse_q.identity = m == 0 ? "euler_analogue_inverse_q" : "symmetry_inverse_q";
  add_common_parameters(inverse_q, m, n, q, std::max(x.level, z.level));
  set_padic_outcome(inverse_q, x.value, z.value, minus_one(std::min(x.trusted_precision, z.trusted_precision)));
  inverse_q.note = "A^q_{m,n} against A^{1/q}_{n-1,m+1}";

  IdentityReport same_q;
  same_q.identity = m == 0 ? "euler_analogue_same_q" : "symmetry_same_q";
  add_common_parameters(same_q, m, n, q, std::max(x.level, y.level));
  set_padic_outcome(same_q, x.value, y.value, std::nullopt, true);
  same_q.note = "A^q_{m,n} against A^q_{n-1,m+1}";
  return {std::move(inverse_q), std::move(same_q)};
}

std::vector<IdentityReport> valuation_bound_check(unsigned max_m, unsigned max_n, const QParam& q, int level,
                                                  const DirectOptions& options) {
  std::vector<IdentityReport> out;
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned n = 1; n <= max_n; ++n) {
      const StabilizedValue sv = a_direct(m, n, q, level, options);
      IdentityReport r;
      r.identity = "valuation_bound";
      add_common_parameters(r, m, n, q, sv.level);
      const long v = sv.value.valuation();
      r.lhs = "v_p(A) = " + valuation_text(v);
      r.rhs = "-2";
      r.residual = sv.value.to_string();
      r.agreement_valuation = v;
      r.required_valuation = -2;
      r.verdict = v >= -2 ? Verdict::kPass : Verdict::kFail;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace qbern
