#include "qbern/residue_ring.hpp"

#include <stdexcept>

#include "qbern/errors.hpp"

namespace qbern {

namespace {
constexpr std::uint64_t kModulusBound = std::uint64_t{1} << 62;
}

int ResidueRing::max_digits(std::uint64_t p) {
  int k = 0;
  std::uint64_t m = 1;
  while (m <= (kModulusBound - 1) / p) {
    m *= p;
    ++k;
  }
  return k;
}

ResidueRing::ResidueRing(std::uint64_t p, int digits) : p_(p), digits_(digits), modulus_(1) {
  if (digits < 1) throw std::invalid_argument("residue ring needs at least one digit");
  if (digits > max_digits(p)) {
    throw ResourceError("p^" + std::to_string(digits) + " exceeds the word-size modulus for p = " +
                        std::to_string(p));
  }
  for (int i = 0; i < digits; ++i) modulus_ *= p;
}

std::uint64_t ResidueRing::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1 % modulus_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t ResidueRing::inverse(std::uint64_t a) const {
  BigInt out;
  const BigInt x(static_cast<unsigned long>(a));
  const BigInt m(static_cast<unsigned long>(modulus_));
  if (mpz_invert(out.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("residue is not a unit");
  }
  return out.get_ui();
}

std::uint64_t ResidueRing::from_rational(const Rational& r) const {
  const BigInt m(static_cast<unsigned long>(modulus_));
  BigInt num, den;
  mpz_mod(num.get_mpz_t(), r.get_num_mpz_t(), m.get_mpz_t());
  mpz_mod(den.get_mpz_t(), r.get_den_mpz_t(), m.get_mpz_t());
  return mul(num.get_ui(), inverse(den.get_ui()));
}

std::vector<std::uint64_t> power_table(const ResidueRing& ring, const Rational& q, std::size_t count) {
  std::vector<std::uint64_t> out(count);
  const std::uint64_t qr = ring.from_rational(q);
  std::uint64_t cur = 1 % ring.modulus();
  for (std::size_t x = 0; x < count; ++x) {
    out[x] = cur;
    cur = ring.mul(cur, qr);
  }
  return out;
}

std::vector<std::uint64_t> bracket_power_table(const ResidueRing& ring, const Rational& q, unsigned power,
                                               std::size_t count) {
  std::vector<std::uint64_t> out(count);
  const std::uint64_t qr = ring.from_rational(q);
  std::uint64_t bracket = 0;
  std::uint64_t qx = 1 % ring.modulus();
  for (std::size_t x = 0; x < count; ++x) {
    out[x] = ring.pow(bracket, power);
    bracket = ring.add(bracket, qx);
    qx = ring.mul(qx, qr);
  }
  return out;
}

}  // namespace qbern
