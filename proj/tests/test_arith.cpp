#include <doctest.h>

#include <random>

#include "qbern/errors.hpp"
#include "qbern/padic.hpp"
#include "qbern/rational.hpp"
#include "qbern/residue_ring.hpp"
#include "qbern/q_calculus.hpp"

using namespace qbern;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 5000);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational(" 5 ") == Rational(5));
  CHECK(parse_rational("6") == Rational(6));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("valuation of rationals") {
  CHECK(valuation(Rational(50), 5) == 2);
  CHECK(valuation(Rational(1, 25), 5) == -2);
  CHECK(valuation(Rational(7, 3), 5) == 0);
  CHECK(valuation(Rational(-81, 2), 3) == 4);
  CHECK_THROWS_AS(valuation(Rational(0), 5), std::domain_error);
}

TEST_CASE("binomial, pow, primality") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(20, 10) == 184756);
  CHECK(pow(Rational(2), -3) == Rational(1, 8));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
  CHECK(pow(std::uint64_t{3}, 40ul) == BigInt("12157665459056928801"));
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 1000000007ull, 18446744073709551557ull}) CHECK(is_prime(p));
  for (std::uint64_t n : {0ull, 1ull, 4ull, 561ull, 1000000008ull, 3215031751ull}) CHECK_FALSE(is_prime(n));
}

TEST_CASE("PadicContext validates its arguments") {
  CHECK_THROWS_AS(PadicContext(4, 8), std::invalid_argument);
  CHECK_THROWS_AS(PadicContext(5, 3), std::invalid_argument);
  CHECK_NOTHROW(PadicContext(5, 4));
}

TEST_CASE("exact p-adic arithmetic stays exact") {
  const PadicContext ctx(5, 8);
  const PadicNumber third = PadicNumber::from_rational(Rational(1, 3), ctx);
  const PadicNumber one = third * PadicNumber::from_integer(3, ctx);
  CHECK(one.is_exact());
  CHECK(one.exact_value() == Rational(1));
  const PadicNumber zero = third - third;
  CHECK(zero.is_exact_zero());
  CHECK(zero.to_string() == "0 (exact)");
  CHECK(PadicNumber::from_rational(Rational(2, 25), ctx).valuation() == -2);
}

TEST_CASE("digits are least significant first") {
  const PadicContext ctx(5, 4);
  const PadicNumber minus_one = PadicNumber::from_integer(-1, ctx);
  CHECK(minus_one.digits() == std::vector<unsigned long>{4, 4, 4, 4});
  const PadicNumber x = PadicNumber::from_integer(1 + 2 * 5 + 3 * 25, ctx);
  CHECK(x.digits() == std::vector<unsigned long>{1, 2, 3, 0});
}

TEST_CASE("approximate arithmetic agrees with exact arithmetic to the tracked precision") {
  std::mt19937_64 rng(20261019);
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    const PadicContext ctx(p, 12);
    for (int trial = 0; trial < 200; ++trial) {
      const Rational a = random_rational(rng);
      const Rational b = random_rational(rng);
      if (a == 0 || b == 0) continue;
      const PadicNumber ea = PadicNumber::from_rational(a, ctx);
      const PadicNumber eb = PadicNumber::from_rational(b, ctx);
      const PadicNumber aa = ea.approximate();
      const PadicNumber ab = eb.approximate();
      const long floor_v = std::min(ea.valuation(), eb.valuation());
      CHECK(agreement(aa + ab, PadicNumber::from_rational(a + b, ctx)) >= floor_v + 12);
      CHECK(agreement(aa * ab, PadicNumber::from_rational(a * b, ctx)) >= ea.valuation() + eb.valuation() + 12);
      CHECK(agreement(aa / ab, PadicNumber::from_rational(a / b, ctx)) >= ea.valuation() - eb.valuation() + 12);
      CHECK((aa + ab).relative_precision() <= 12);
    }
  }
}

TEST_CASE("approximate values lose digits under cancellation") {
  const PadicContext ctx(3, 6);
  const PadicNumber a = PadicNumber::from_rational(Rational(1), ctx).approximate();
  const PadicNumber b = PadicNumber::from_rational(Rational(1 + 729), ctx).approximate();
  const PadicNumber d = b - a;
  CHECK(d.is_zero());
  CHECK_FALSE(d.is_exact_zero());
  CHECK(d.valuation() == 6);
}

TEST_CASE("division by zero and context mismatch throw") {
  const PadicContext ctx(5, 8);
  const PadicNumber one = PadicNumber::from_integer(1, ctx);
  CHECK_THROWS(one / PadicNumber::zero(ctx));
  CHECK_THROWS(one + PadicNumber::from_integer(1, PadicContext(3, 8)));
}

TEST_CASE("p-adic logarithm") {
  const PadicContext ctx(5, 10);
  const PadicNumber l6 = padic_log(PadicNumber::from_integer(6, ctx));
  const PadicNumber l36 = padic_log(PadicNumber::from_integer(36, ctx));
  CHECK(agreement(l36, l6 * PadicNumber::from_integer(2, ctx)) >= 10);
  const PadicNumber linv = padic_log(PadicNumber::from_rational(Rational(1, 6), ctx));
  CHECK(agreement(linv, -l6) >= 10);
  CHECK(l6.valuation() == 1);
  CHECK_FALSE(l6.is_exact());
  CHECK_THROWS_AS(padic_log(PadicNumber::from_integer(2, ctx)), std::domain_error);
  CHECK(log_series_length(5, 1, 10) >= 11);
}

TEST_CASE("residue ring arithmetic") {
  CHECK(ResidueRing::max_digits(3) == 39);
  CHECK(ResidueRing::max_digits(5) == 26);
  CHECK(ResidueRing::max_digits(7) == 22);
  CHECK_THROWS_AS(ResidueRing(3, 40), ResourceError);
  const ResidueRing ring(5, 20);
  const std::uint64_t half = ring.from_rational(Rational(1, 2));
  CHECK(ring.mul(half, 2) == 1);
  CHECK(ring.mul(ring.inverse(7), 7) == 1);
  CHECK_THROWS_AS(ring.inverse(10), std::domain_error);
  CHECK(ring.add(ring.neg(3), 3) == 0);
  CHECK(ring.sub(2, 5) == ring.modulus() - 3);
  CHECK(ring.pow(2, 10) == 1024);
}

TEST_CASE("bracket power table matches exact brackets modulo p^k") {
  const ResidueRing ring(3, 30);
  const Rational q(4);
  const std::vector<std::uint64_t> table = bracket_power_table(ring, q, 3, 50);
  const std::vector<std::uint64_t> inverse_table = bracket_power_table(ring, 1 / q, 2, 50);
  for (long x = 0; x < 50; ++x) {
    CHECK(table[x] == ring.from_rational(pow(q_bracket(x, q), 3)));
    CHECK(inverse_table[x] == ring.from_rational(pow(q_bracket(x, 1 / q), 2)));
  }
}
