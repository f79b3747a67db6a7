#pragma once

#include <vector>

#include "qbern/identity_report.hpp"
#include "qbern/rational.hpp"
#include "qbern/real.hpp"

namespace qbern {

/// Real q in (0,1) with a high-precision ln q, a series length and a tolerance.
struct RealEvalContext {
  Rational q;
  Real lnq;
  unsigned terms = 200;
  Real tolerance;

  /// Throws std::invalid_argument unless 0 < q < 1, terms > 0 and tolerance > 0.
  static RealEvalContext make(const Rational& q, unsigned terms, const Real& tolerance);
};

/// sum_{m=first}^{M} q^m [m]_q^{n-1}, exact.
Rational series_partial_sum(unsigned n, const RealEvalContext& ctx, unsigned first = 0);

/// n |ln q| q^{M+1} / (1-q)^{n+1}: bounds the dropped tail of n (ln q/(1-q)) sum q^m [m]_q^{n-1}.
Real series_tail_bound(unsigned n, const RealEvalContext& ctx);

/// Throws ResourceError("... increase M") when the tail bound is not below tolerance/10.
void require_tail_bound(unsigned n, const RealEvalContext& ctx);

/// (ln q/(q-1)) sum_{m=1}^{M} q^m [m]_q^{n-1}, the printed right side for -beta~_n/n.
Real series_printed_partial_sum(unsigned n, const RealEvalContext& ctx);

/// c_n = (1-q)^{-n}, the l = 0 term of the closed form that the geometric
/// series step does not produce.
Rational series_correction_constant(unsigned n, const Rational& q);

/// beta~_n at L = ln q.
Real modified_beta_real(unsigned n, const RealEvalContext& ctx);

/// [0] corrected series: beta~_n against c_n + n (ln q/(1-q)) sum_{m>=0}; asserted.
/// [1] printed series: beta~_n against n (ln q/(1-q)) sum_{m>=1}; informative.
std::vector<IdentityReport> series_residual(unsigned n, const RealEvalContext& ctx);

/// The l >= 1 part of the closed form, taken symbolically, against n (ln q/(1-q)) sum_{m>=0}.
IdentityReport series_core_check(unsigned n, const RealEvalContext& ctx);

/// t^k/k! coefficient of t (ln q/(1-q)) sum_m q^m e^{[m]_q t}, plus c_k, against beta~_k.
IdentityReport genfun_coefficient_check(unsigned k, const RealEvalContext& ctx);

/// Printed constant term ln q/(1-q)^2 against beta~_0 = 1. Informative.
IdentityReport genfun_constant_term_probe(const RealEvalContext& ctx);

/// t^1 coefficient with the printed exponent ([m]_q)^t, i.e. e ln q/(1-q)^2, against beta~_1. Informative.
IdentityReport genfun_exponent_probe(const RealEvalContext& ctx);

/// |beta~_n(q) - B_n| and |beta_n(q) - B_n| at a real q near 1.
IdentityReport classical_limit_modified(unsigned n, const Rational& q, const Real& tolerance);
IdentityReport classical_limit_carlitz(unsigned n, const Rational& q, const Real& tolerance);

}  // namespace qbern
