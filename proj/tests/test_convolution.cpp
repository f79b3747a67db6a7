#include <doctest.h>

#include <random>

#include "qbern/bernoulli.hpp"
#include "qbern/convolution.hpp"
#include "qbern/errors.hpp"

using namespace qbern;

namespace {

const PadicContext kCtx3(3, 20);
const QParam kQ4 = QParam::padic(Rational(4), kCtx3);

// Level-N Riemann sums of z -> ([.]_{1/4}^m ⊛ g)(z) at p = 3, frozen from an
// independent exact-fraction evaluation of the same sums.
const char* const kA02Level5 =
    "365417297156330137738312250035231172506465992008336815098282661940601355801490625857703869402951049207551757"
    "826739869895397659704571468238870607/3";
const char* const kA12Level3 = "22257788316759636649866197269/844424930131968";
const char* const kA12WeightedLevel3 = "3818673035027502223661052842904142472533249/211106232532992";

}  // namespace

TEST_CASE("discrete convolution") {
  const std::vector<long> ones(5, 1);
  const std::vector<long> ramp{0, 1, 2, 3, 4};
  CHECK(discrete_convolution<long>(ones, ones, 4) == 5);
  CHECK(discrete_convolution<long>(ramp, ones, 4) == 10);
  CHECK_THROWS_AS(discrete_convolution<long>(ones, ones, 5), std::invalid_argument);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> f, g;
    for (int i = 0; i <= 10; ++i) {
      Rational a(num(rng), den(rng)), b(num(rng), den(rng));
      a.canonicalize();
      b.canonicalize();
      f.push_back(a);
      g.push_back(b);
    }
    for (std::size_t n = 0; n <= 10; ++n) {
      CHECK(discrete_convolution<Rational>(f, g, n) == discrete_convolution<Rational>(g, f, n));
    }
  }
  const ResidueRing ring(5, 10);
  const std::vector<std::uint64_t> a{1, 2, 3}, b{4, 5, 6};
  CHECK(discrete_convolution(ring, a, b, 2) == 1 * 6 + 2 * 5 + 3 * 4);
}

TEST_CASE("direct Riemann sums match frozen exact values") {
  const PadicNumber s02 = convolution_riemann_sum(0, 1, 0, kQ4, 5);
  CHECK(agreement(s02, PadicNumber::from_rational(parse_rational(kA02Level5), kCtx3)) >= 15);
  for (DirectMethod method : {DirectMethod::kPrefix, DirectMethod::kConvolution}) {
    const PadicNumber s12 = convolution_riemann_sum(1, 1, 0, kQ4, 3, method);
    CHECK(agreement(s12, PadicNumber::from_rational(parse_rational(kA12Level3), kCtx3)) >= 15);
    const PadicNumber w12 = convolution_riemann_sum(1, 1, 1, kQ4, 3, method);
    CHECK(agreement(w12, PadicNumber::from_rational(parse_rational(kA12WeightedLevel3), kCtx3)) >= 15);
  }
}

TEST_CASE("prefix and convolution methods agree") {
  for (unsigned m = 0; m <= 3; ++m) {
    for (unsigned power = 0; power <= 3; ++power) {
      for (unsigned shift : {0u, 1u}) {
        const PadicNumber a = convolution_riemann_sum(m, power, shift, kQ4, 4, DirectMethod::kPrefix);
        const PadicNumber b = convolution_riemann_sum(m, power, shift, kQ4, 4, DirectMethod::kConvolution);
        CHECK(agreement(a, b) >= a.valuation() + 20);
      }
    }
  }
}

TEST_CASE("A_{0,1} = 1/2") {
  const StabilizedValue a = a_direct(0, 1, kQ4, 4);
  CHECK(agreement(a.value, PadicNumber::from_rational(Rational(1, 2), kCtx3)) >= a.trusted_precision);
  CHECK(a.trusted_precision >= 4);
}

TEST_CASE("escalation stops on agreement or throws") {
  const StabilizedValue a = a_direct(0, 2, kQ4, 4);
  CHECK(a.agreeing_digits >= 4);
  CHECK(a.levels.front() == 4);
  CHECK(a.levels.back() == a.level);
  CHECK(a.deltas.size() + 1 == a.levels.size());
  DirectOptions tight;
  tight.max_level = 4;
  CHECK_THROWS_AS(a_direct(1, 2, kQ4, 4, tight), InsufficientPrecision);
  CHECK_THROWS_AS(a_direct(1, 0, kQ4, 4), std::invalid_argument);
  CHECK_THROWS_AS(convolution_riemann_sum(1, 1, 0, kQ4, 10, DirectMethod::kConvolution), ResourceError);
}

TEST_CASE("closed form") {
  CHECK(a_closed(1, 1, kQ4) == LogLaurent(Rational(-4, 9)) + LogLaurent::monomial(Rational(32, 135), 1));
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned n = 1; n <= 4; ++n) {
      const LogLaurent c = a_closed(m, n, kQ4);
      CHECK(c.min_degree() >= -1);
      CHECK(c.max_degree() <= 1);
    }
  }
}

TEST_CASE("closed form equals the q^z-weighted convolution integral") {
  for (unsigned m = 0; m <= 3; ++m) {
    for (unsigned n = 1; n <= 3; ++n) {
      const IdentityReport r = closed_form_derivative_check(m, n, kQ4, 4);
      CHECK_MESSAGE(r.verdict == Verdict::kPass, r.identity, " m=", m, " n=", n, " agreement ", r.agreement_text());
    }
  }
}

TEST_CASE("closed form does not match A_{m,n} or A_{m,n+1}") {
  const ConventionResolution res = resolve_index_convention(2, 2, kQ4, 4);
  CHECK_FALSE(res.winner);
  CHECK(std::any_of(res.same.begin(), res.same.end(), [](const IdentityReport& r) { return r.verdict == Verdict::kFail; }));
  CHECK(std::any_of(res.shifted.begin(), res.shifted.end(),
                    [](const IdentityReport& r) { return r.verdict == Verdict::kFail; }));
}

TEST_CASE("integral identity with the true derivative") {
  for (unsigned m = 0; m <= 3; ++m) {
    for (unsigned n = 1; n <= 3; ++n) {
      const IdentityReport r = convolution_identity_check(m, n, kQ4, 4);
      CHECK(r.verdict == Verdict::kPass);
      REQUIRE(r.agreement_valuation);
      REQUIRE(r.required_valuation);
      CHECK(*r.agreement_valuation >= *r.required_valuation);
      const IdentityReport literal = convolution_identity_printed_probe(m, n, kQ4, 4);
      CHECK(literal.verdict == Verdict::kInformative);
    }
  }
}

TEST_CASE("star convolution") {
  const QParam q = kQ4;
  // Linearity in g.
  const CharacterSum f = inverse_monomial_characters(1, q);
  const CharacterSum g = monomial_characters(1, q);
  for (long z = 0; z <= 3; ++z) {
    CHECK(star_convolution(f, g + g, z, q.value()) == LogLaurent(2) * star_convolution(f, g, z, q.value()));
  }
  // Symbolic value against the brute-force x-integral.
  for (unsigned m = 0; m <= 2; ++m) {
    for (unsigned n = 1; n <= 2; ++n) {
      for (long z : {0L, 2L}) {
        const PadicNumber symbolic = evaluate_at_log(star_convolution_value(m, n, q, z), q.value(), kCtx3);
        CHECK(agreement(symbolic, star_convolution_riemann(m, n, q, z, 5)) >= 4);
      }
    }
  }
  // Averaging the star values over z approaches I_0(f) I_0(g).
  for (unsigned m = 0; m <= 2; ++m) {
    for (unsigned n = 1; n <= 2; ++n) {
      const PadicNumber target =
          evaluate_at_log(modified_beta_inverse_q(m, q) * modified_beta(n, q), q.value(), kCtx3);
      for (int level = 2; level <= 4; ++level) {
        long size = 1;
        for (int i = 0; i < level; ++i) size *= 3;
        LogLaurent sum;
        for (long z = 0; z < size; ++z) sum += star_convolution_value(m, n, q, z);
        const PadicNumber average = evaluate_at_log(sum * LogLaurent(Rational(1, size)), q.value(), kCtx3);
        CHECK(agreement(average, target) >= level - 1);
      }
    }
  }
}

TEST_CASE("symmetry") {
  for (unsigned m = 0; m <= 2; ++m) {
    for (unsigned n = 1; n <= 3; ++n) {
      const std::vector<IdentityReport> r = symmetry_report(m, n, kQ4, 4);
      REQUIRE(r.size() == 2);
      CHECK(r[0].verdict == Verdict::kPass);
      CHECK(r[1].verdict == Verdict::kInformative);
    }
  }
  // A_{0,2} against A_{1,1} at the same q: they differ.
  const StabilizedValue x = a_direct(0, 2, kQ4, 4);
  const StabilizedValue y = a_direct(1, 1, kQ4, 4);
  CHECK(agreement(x.value, y.value) < std::min(x.trusted_precision, y.trusted_precision) - 1);
}

TEST_CASE("valuation bound") {
  for (const IdentityReport& r : valuation_bound_check(3, 3, kQ4, 4)) CHECK(r.verdict == Verdict::kPass);
}
