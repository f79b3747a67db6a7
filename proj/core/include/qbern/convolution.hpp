#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qbern/identity_report.hpp"
#include "qbern/log_laurent.hpp"
#include "qbern/padic.hpp"
#include "qbern/q_calculus.hpp"
#include "qbern/residue_ring.hpp"
#include "qbern/volkenborn.hpp"

namespace qbern {

/// (f ⊛ g)(n) = sum_{i=0}^{n} f(i) g(n - i).
template <class T>
T discrete_convolution(std::span<const T> f, std::span<const T> g, std::size_t n) {
  if (f.size() <= n || g.size() <= n) throw std::invalid_argument("discrete_convolution: sequences shorter than n + 1");
  T sum{};
  for (std::size_t i = 0; i <= n; ++i) sum += f[i] * g[n - i];
  return sum;
}

/// Modular variant over Z/p^k.
std::uint64_t discrete_convolution(const ResidueRing& ring, std::span<const std::uint64_t> f,
                                   std::span<const std::uint64_t> g, std::size_t n);

/// (f * g)(z) = I_0^{(x)}(f(x) g(z - x)) - (f ⊛ g')(z) at an integer z >= 0,
/// exact in Q[L, 1/L].
LogLaurent star_convolution(const CharacterSum& f, const CharacterSum& g, long z, const Rational& q);

/// f = [x]_{q^{-1}}^m, g = [x]_q^n.
LogLaurent star_convolution_value(unsigned m, unsigned n, const QParam& q, long z);

/// Brute-force form of the same value: the x-integral as a level-N Riemann
/// sum, minus the convolution term evaluated p-adically.
PadicNumber star_convolution_riemann(unsigned m, unsigned n, const QParam& q, long z, int level,
                                     const CostLimits& limits = {});

enum class DirectMethod {
  kConvolution,  // h(z) by discrete_convolution for every z: O(p^{2N})
  kPrefix,       // sum_z h(z) = sum_i f(i) G(P - 1 - i) with G the prefix sums of g: O(p^N)
};

struct DirectOptions {
  int min_agreeing_digits = 4;
  int max_level = 14;
  DirectMethod method = DirectMethod::kPrefix;
  CostLimits limits{};
};

/// A Riemann value accepted once two consecutive levels agree.
struct StabilizedValue {
  PadicNumber value;         // S at `level`
  int level = 0;
  long trusted_precision = 0;  // v_p(S_level - S_{level-1})
  long agreeing_digits = 0;    // trusted_precision - v_p(S_level)
  std::vector<int> levels;
  std::vector<long> deltas;
};

/// p^{-N} sum_{z < p^N} ([.]_{q^{-1}}^m ⊛ g)(z) with g(j) = q^{shift j} [j]_q^power.
PadicNumber convolution_riemann_sum(unsigned m, unsigned power, unsigned shift, const QParam& q, int level,
                                    DirectMethod method = DirectMethod::kPrefix, const CostLimits& limits = {});

/// Raises the level from `level` until two consecutive sums agree in at
/// least options.min_agreeing_digits significant digits. Throws
/// InsufficientPrecision when max_level or the cost cap is reached first.
StabilizedValue convolution_integral(unsigned m, unsigned power, unsigned shift, const QParam& q, int level,
                                     const DirectOptions& options = {});

/// A_{m,n} = I_0^{(z)}([z]_{q^{-1}}^m ⊛ [z]_q^{n-1}), n >= 1.
StabilizedValue a_direct(unsigned m, unsigned n, const QParam& q, int level, const DirectOptions& options = {});

/// (q-1)/(n L) sum_{l=1}^n sum_{k=0}^l C(n,l) C(l,k) (-1)^l q^{-l} (q-1)^k
///   b_{m+l, q^{-1}} b_{n+k-l, q}, exact. n >= 1.
LogLaurent a_closed(unsigned m, unsigned n, const QParam& q);

/// Which direct index the closed form is compared against.
enum class IndexConvention {
  kSame,     // a_closed(m, n) vs A_{m, n}
  kShifted,  // a_closed(m, n) vs A_{m, n+1}
};

std::string_view to_string(IndexConvention c);

struct AmnValue {
  unsigned m = 0;
  unsigned n = 1;
  StabilizedValue direct;
  LogLaurent closed;
  PadicNumber closed_evaluated;
};

AmnValue amn_value(unsigned m, unsigned n, const QParam& q, int level, const DirectOptions& options = {});

/// Integral form of the convolution identity for f = [.]_{q^{-1}}^m, g = [.]_q^n:
///   I_0(f ⊛ g') = I_0 I_0 f(x) g(z - x) - I_0(f) I_0(g),
/// with g' taken from monomial_derivative. Pass when the agreement reaches
/// the trusted precision of the Riemann side minus one.
IdentityReport convolution_identity_check(unsigned m, unsigned n, const QParam& q, int level,
                                   const DirectOptions& options = {});

/// Same identity with the left side written as n L/(q-1) A_{m,n}, i.e. with
/// the derivative n L/(q-1) [x]_q^{n-1}. Informative.
IdentityReport convolution_identity_printed_probe(unsigned m, unsigned n, const QParam& q, int level,
                                  const DirectOptions& options = {});

/// a_closed(m, n) against A_{m,n} or A_{m,n+1}.
IdentityReport closed_form_check(unsigned m, unsigned n, const QParam& q, int level, IndexConvention convention,
                                 const DirectOptions& options = {});

/// a_closed(m, n) against I_0([.]_{q^{-1}}^m ⊛ q^z [z]_q^{n-1}), the quantity
/// the closed form computes when the true derivative of [x]_q^n is used.
IdentityReport closed_form_derivative_check(unsigned m, unsigned n, const QParam& q, int level,
                                            const DirectOptions& options = {});

struct ConventionResolution {
  std::optional<IndexConvention> winner;
  std::vector<IdentityReport> same;
  std::vector<IdentityReport> shifted;
};

/// Runs closed_form_check under both conventions on the grid 0 <= m <= max_m,
/// 1 <= n <= max_n. The winner is the convention whose checks all pass.
ConventionResolution resolve_index_convention(unsigned max_m, unsigned max_n, const QParam& q, int level,
                                              const DirectOptions& options = {});

/// X = A^q_{m,n}, Y = A^q_{n-1,m+1}, Z = A^{q^{-1}}_{n-1,m+1}. Returns
/// {X = Z (asserted), X = Y (informative)}.
std::vector<IdentityReport> symmetry_report(unsigned m, unsigned n, const QParam& q, int level,
                                            const DirectOptions& options = {});

/// v_p(A_{m,n}) >= -2 for every grid point.
std::vector<IdentityReport> valuation_bound_check(unsigned max_m, unsigned max_n, const QParam& q, int level,
                                                  const DirectOptions& options = {});

}  // namespace qbern
