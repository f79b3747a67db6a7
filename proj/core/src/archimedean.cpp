#include "qbern/archimedean.hpp"

#include <stdexcept>

#include "qbern/bernoulli.hpp"
#include "qbern/errors.hpp"
#include "qbern/q_calculus.hpp"

namespace qbern {

namespace {

void add_parameters(IdentityReport& r, const char* index_name, unsigned n, const RealEvalContext& ctx) {
  r.parameters = {{index_name, std::to_string(n)}, {"q", to_string(ctx.q)}, {"M", std::to_string(ctx.terms)}};
}

Real series_value(unsigned n, const RealEvalContext& ctx, unsigned first) {
  return Real(n) * ctx.lnq / to_real(1 - ctx.q) * to_real(series_partial_sum(n, ctx, first));
}

}  // namespace

RealEvalContext RealEvalContext::make(const Rational& q, unsigned terms, const Real& tolerance) {
  if (q <= 0 || q >= 1) throw std::invalid_argument("real q must lie in (0,1), got " + to_string(q));
  if (terms == 0) throw std::invalid_argument("series terms must be positive");
  if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
  return {q, log(to_real(q)), terms, tolerance};
}

Rational series_partial_sum(unsigned n, const RealEvalContext& ctx, unsigned first) {
  if (n == 0) throw std::invalid_argument("series needs n >= 1");
  Rational sum = 0;
  Rational qm = pow(ctx.q, static_cast<long>(first));
  for (unsigned m = first; m <= ctx.terms; ++m) {
    sum += qm * pow(q_bracket(m, ctx.q), static_cast<long>(n - 1));
    qm *= ctx.q;
  }
  return sum;
}

Real series_tail_bound(unsigned n, const RealEvalContext& ctx) {
  const Real one_minus_q = to_real(1 - ctx.q);
  return Real(n) * abs(ctx.lnq) * pow(to_real(ctx.q), ctx.terms + 1) / pow(one_minus_q, n + 1);
}

void require_tail_bound(unsigned n, const RealEvalContext& ctx) {
  const Real bound = series_tail_bound(n, ctx);
  if (!(bound < ctx.tolerance / 10)) {
    throw ResourceError("series tail bound " + format_real(bound, 3) + " not below tolerance/10 at M = " +
                        std::to_string(ctx.terms) + "; increase M");
  }
}

Real series_printed_partial_sum(unsigned n, const RealEvalContext& ctx) {
  require_tail_bound(n, ctx);
  return ctx.lnq / to_real(ctx.q - 1) * to_real(series_partial_sum(n, ctx, 1));
}

Rational series_correction_constant(unsigned n, const Rational& q) { return 1 / pow(1 - q, static_cast<long>(n)); }

Real modified_beta_real(unsigned n, const RealEvalContext& ctx) {
  return evaluate(modified_beta(n, QParam::real(ctx.q)), ctx.lnq);
}

std::vector<IdentityReport> series_residual(unsigned n, const RealEvalContext& ctx) {
  require_tail_bound(n, ctx);
  const Real beta = modified_beta_real(n, ctx);
  const Real c = to_real(series_correction_constant(n, ctx.q));

  IdentityReport corrected;
  corrected.identity = "series_with_correction";
  add_parameters(corrected, "n", n, ctx);
  set_real_outcome(corrected, beta, c + series_value(n, ctx, 0), ctx.tolerance);
  corrected.note = "beta~_n = (1-q)^{-n} + n ln q/(1-q) sum_{m>=0} q^m [m]_q^{n-1}";

  IdentityReport printed;
  printed.identity = "series_printed";
  add_parameters(printed, "n", n, ctx);
  set_real_outcome(printed, beta, series_value(n, ctx, 1), std::nullopt, true);
  printed.note = "beta~_n = n ln q/(1-q) sum_{m>=1} q^m [m]_q^{n-1} as printed";
  return {std::move(corrected), std::move(printed)};
}

IdentityReport series_core_check(unsigned n, const RealEvalContext& ctx) {
  if (n == 0) throw std::invalid_argument("series needs n >= 1");
  require_tail_bound(n, ctx);
  // sum_{l>=1} C(n,l) (-1)^l l L/(q^l - 1) / (1-q)^n
  LogLaurent core;
  for (unsigned l = 1; l <= n; ++l) {
    const Rational c = binomial(n, l) * (l % 2 == 0 ? 1 : -1) * static_cast<long>(l) /
                       (pow(ctx.q, static_cast<long>(l)) - 1);
    core += LogLaurent::monomial(c, 1);
  }
  core = LogLaurent(series_correction_constant(n, ctx.q)) * core;

  IdentityReport r;
  r.identity = "series_core";
  add_parameters(r, "n", n, ctx);
  set_real_outcome(r, evaluate(core, ctx.lnq), series_value(n, ctx, 0), ctx.tolerance);
  r.note = "l >= 1 part of the closed form against its geometric-series expansion";
  return r;
}

IdentityReport genfun_coefficient_check(unsigned k, const RealEvalContext& ctx) {
  if (k == 0) throw std::invalid_argument("generating function check needs k >= 1");
  require_tail_bound(k, ctx);
  const Real coefficient = series_value(k, ctx, 0);
  IdentityReport r;
  r.identity = "generating_function_coefficient";
  add_parameters(r, "k", k, ctx);
  set_real_outcome(r, modified_beta_real(k, ctx), to_real(series_correction_constant(k, ctx.q)) + coefficient,
                   ctx.tolerance);
  r.note = "t^k/k! coefficient " + format_real(coefficient) + " of t ln q/(1-q) sum q^m e^{[m]_q t}, plus (1-q)^{-k}";
  return r;
}

IdentityReport genfun_constant_term_probe(const RealEvalContext& ctx) {
  IdentityReport r;
  r.identity = "generating_function_constant_term";
  add_parameters(r, "k", 0, ctx);
  const Real printed = ctx.lnq / to_real((1 - ctx.q) * (1 - ctx.q));
  set_real_outcome(r, Real(1), printed, std::nullopt, true);
  r.note = "beta~_0 = 1 against the printed constant ln q/(1-q)^2";
  return r;
}

IdentityReport genfun_exponent_probe(const RealEvalContext& ctx) {
  IdentityReport r;
  r.identity = "generating_function_exponent";
  add_parameters(r, "k", 1, ctx);
  // e^{[m]^t} at t = 0 is e for every m (0^0 = 1), so the t coefficient is e ln q/(1-q) sum q^m.
  const Real printed = exp(Real(1)) * ctx.lnq / to_real((1 - ctx.q) * (1 - ctx.q));
  set_real_outcome(r, modified_beta_real(1, ctx), printed, std::nullopt, true);
  r.note = "t coefficient with exponent ([m]_q)^t as printed, against beta~_1";
  return r;
}

IdentityReport classical_limit_modified(unsigned n, const Rational& q, const Real& tolerance) {
  const RealEvalContext ctx = RealEvalContext::make(q, 1, tolerance);
  IdentityReport r;
  r.identity = "classical_limit_modified";
  r.parameters = {{"n", std::to_string(n)}, {"q", to_string(q)}};
  set_real_outcome(r, modified_beta_real(n, ctx), to_real(classical_bernoulli(n)), tolerance);
  return r;
}

IdentityReport classical_limit_carlitz(unsigned n, const Rational& q, const Real& tolerance) {
  IdentityReport r;
  r.identity = "classical_limit_carlitz";
  r.parameters = {{"n", std::to_string(n)}, {"q", to_string(q)}};
  set_real_outcome(r, to_real(carlitz_beta(n, QParam::real(q))), to_real(classical_bernoulli(n)), tolerance);
  return r;
}

}  // namespace qbern
