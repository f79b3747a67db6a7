#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qbern {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// v_p(r) for nonzero r. Throws std::domain_error for r == 0, whose
/// valuation is +infinity.
long valuation(const Rational& r, std::uint64_t p);
long valuation(const BigInt& z, std::uint64_t p);

/// Exact binomial coefficient; zero when k > n.
Rational binomial(unsigned n, unsigned k);

/// base^exponent for any integer exponent. 0^negative throws std::domain_error.
Rational pow(const Rational& base, long exponent);

BigInt pow(std::uint64_t base, unsigned long exponent);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Bits in numerator plus bits in denominator.
std::size_t bit_size(const Rational& r);

}  // namespace qbern
