#pragma once

#include <cstdint>
#include <vector>

#include "qbern/rational.hpp"

namespace qbern {

__extension__ typedef unsigned __int128 Wide;

/// Z / p^k Z on machine words. The modulus is kept below 2^62 so sums of two
/// residues never overflow.
class ResidueRing {
 public:
  /// Throws ResourceError when p^digits does not fit.
  ResidueRing(std::uint64_t p, int digits);

  /// Largest k with p^k < 2^62.
  static int max_digits(std::uint64_t p);

  std::uint64_t prime() const noexcept { return p_; }
  int digits() const noexcept { return digits_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + modulus_ - b; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : modulus_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % modulus_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error for non-units.
  std::uint64_t inverse(std::uint64_t a) const;
  /// Image of a rational whose denominator is prime to p.
  std::uint64_t from_rational(const Rational& r) const;

 private:
  std::uint64_t p_;
  int digits_;
  std::uint64_t modulus_;
};

/// [x]_q^power mod p^k for x = 0 .. count-1, using [x+1]_q = [x]_q + q^x
/// (no division by 1 - q, which is not a unit).
std::vector<std::uint64_t> bracket_power_table(const ResidueRing& ring, const Rational& q, unsigned power,
                                               std::size_t count);

/// q^x mod p^k for x = 0 .. count-1.
std::vector<std::uint64_t> power_table(const ResidueRing& ring, const Rational& q, std::size_t count);

}  // namespace qbern
