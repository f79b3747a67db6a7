#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qbern/log_laurent.hpp"
#include "qbern/padic.hpp"
#include "qbern/q_calculus.hpp"

namespace qbern {

struct CostLimits {
  /// Bit size allowed for exact powers q^{l p^N}; beyond it the geometric
  /// path switches to modular p-adic arithmetic.
  std::size_t max_exact_bits = 1'000'000;
  /// Points allowed in literal enumerations.
  std::uint64_t max_points = std::uint64_t{1} << 22;
  /// Scalar operations allowed in O(p^{2N}) brute-force sums.
  std::uint64_t max_operations = 400'000'000;
};

enum class SumMethod { kEnumeration, kGeometric };

/// S_N = p^{-N} sum_{x < p^N} f(x).
struct RiemannSumResult {
  int level = 0;
  SumMethod method = SumMethod::kGeometric;
  std::optional<Rational> exact;
  PadicNumber value;
};

/// Riemann sum at level N for a p-adic q (the context of q supplies p and
/// the precision). Enumeration adds the terms literally; the geometric path
/// sums each character as (q^{l p^N} - 1)/(q^l - 1). Throws ResourceError
/// when the requested method exceeds the limits.
RiemannSumResult riemann_sum(const CharacterSum& f, const QParam& q, int level,
                             SumMethod method = SumMethod::kGeometric, const CostLimits& limits = {});

/// I_0(q^{l x}) = l L/(q^l - 1), and 1 for l = 0.
LogLaurent character_integral(long l, const Rational& q);
LogLaurent integrate(const CharacterSum& f, const Rational& q);

/// I_0([x]_q^n); equals the modified q-Bernoulli number.
LogLaurent monomial_integral(unsigned n, const QParam& q);

/// I_0([z]_q^r q^{l z}) through the character expansion of the product.
LogLaurent weighted_monomial_integral_direct(unsigned r, unsigned l, const QParam& q);
/// Same integral through q^{l z} = sum_k C(l,k) (q-1)^k [z]_q^k.
LogLaurent weighted_monomial_integral_binomial(unsigned r, unsigned l, const QParam& q);
/// Both routes; throws std::logic_error if they ever disagree.
LogLaurent weighted_monomial_integral(unsigned r, unsigned l, const QParam& q);

/// I_0^{(z)} I_0^{(x)} [x]_{q^{-1}}^m [z - x]_q^n via the expansion
/// [z - x]_q = [z]_q - q^{-1} q^z [x]_{q^{-1}}.
LogLaurent double_integral(unsigned m, unsigned n, const QParam& q);
/// Same integral by pairing characters of both factors directly.
LogLaurent double_integral_characters(unsigned m, unsigned n, const QParam& q);

/// [x]_{q^s}^power with s = +1 or -1.
struct BracketPower {
  unsigned power = 0;
  bool inverse_base = false;
};

/// p^{-2N} sum_{x, z < p^N} f(x) g(z - x): the brute-force double Riemann sum.
PadicNumber double_riemann_sum(BracketPower f, BracketPower g, const QParam& q, int level,
                               const CostLimits& limits = {});

struct ConvergenceProfile {
  std::vector<int> levels;
  std::vector<PadicNumber> values;
  /// deltas[i] = v_p(S_{levels[i+1]} - S_{levels[i]}); kInfiniteValuation when equal.
  std::vector<long> deltas;
  PadicNumber stabilized_value;
  /// Absolute precision trusted for stabilized_value: the last delta.
  long stabilized_digits = 0;
};

ConvergenceProfile convergence_profile(const CharacterSum& f, const QParam& q, int first_level, int last_level,
                                       const CostLimits& limits = {});

}  // namespace qbern
