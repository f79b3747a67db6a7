#include <doctest.h>

#include "qbern/bernoulli.hpp"

using namespace qbern;

namespace {

LogLaurent ll(const char* constant, const char* linear) {
  return LogLaurent(parse_rational(constant)) + LogLaurent::monomial(parse_rational(linear), 1);
}

}  // namespace

TEST_CASE("classical Bernoulli numbers") {
  const std::vector<const char*> expected{"1",     "-1/2", "1/6",    "0",         "-1/30", "0",     "1/42",
                                          "0",     "-1/30", "0",     "5/66",      "0",     "-691/2730", "0",
                                          "7/6",   "0",    "-3617/510", "0",      "43867/798", "0", "-174611/330"};
  for (unsigned n = 0; n < expected.size(); ++n) CHECK(classical_bernoulli(n) == parse_rational(expected[n]));
}

TEST_CASE("Carlitz q-Bernoulli numbers at q = 2") {
  // Frozen from an independent recurrence in exact fractions.
  const QParam q = QParam::formal(Rational(2));
  const std::vector<const char*> expected{"1", "-1/3", "2/21", "-2/105", "-2/3255", "2/651"};
  for (unsigned n = 0; n < expected.size(); ++n) CHECK(carlitz_beta(n, q) == parse_rational(expected[n]));
}

TEST_CASE("printed low-order Carlitz values") {
  for (long qi : {2L, 3L, 6L}) {
    const Rational q(qi);
    const QParam qp = QParam::formal(q);
    CHECK(carlitz_beta(1, qp) == -1 / q_bracket(2, q));
    CHECK(carlitz_beta(2, qp) == q / (q_bracket(2, q) * q_bracket(3, q)));
    // The printed beta_3 = (1-q)/([3][4]) is not what the recurrence gives.
    CHECK(carlitz_beta(3, qp) != (1 - q) / (q_bracket(3, q) * q_bracket(4, q)));
  }
}

TEST_CASE("modified q-Bernoulli numbers at q = 6") {
  const PadicContext ctx(5, 8);
  const QParam q = QParam::padic(Rational(6), ctx);
  CHECK(modified_beta(0, q) == LogLaurent(1));
  CHECK(modified_beta(1, q) == ll("-1/5", "1/25"));
  CHECK(modified_beta(2, q) == ll("1/25", "-12/875"));
  CHECK(modified_beta(3, q) == ll("-1/125", "666/188125"));
  CHECK(modified_beta_inverse_q(2, q) == ll("36/25", "-432/875"));
}

TEST_CASE("modified values lie in Q + Q L") {
  const QParam q = QParam::formal(Rational(4));
  for (unsigned n = 1; n <= 15; ++n) {
    const LogLaurent b = modified_beta(n, q);
    CHECK(b.min_degree() >= 0);
    CHECK(b.max_degree() == 1);
  }
}

TEST_CASE("inverse-q family is the modified family at 1/q with L negated") {
  const QParam q = QParam::formal(Rational(6));
  const QParam qi = QParam::formal(Rational(1, 6));
  for (unsigned n = 0; n <= 10; ++n) CHECK(modified_beta_inverse_q(n, q) == modified_beta(n, qi).negate_log());
}

TEST_CASE("closed form equals recurrence") {
  std::vector<QParam> qs{QParam::padic(Rational(4), PadicContext(3, 8)), QParam::padic(Rational(6), PadicContext(5, 8)),
                         QParam::padic(Rational(8), PadicContext(7, 8)),
                         QParam::padic(Rational(7, 2), PadicContext(5, 8)), QParam::formal(Rational(3, 2))};
  for (const QParam& q : qs) {
    for (unsigned n = 0; n <= 20; ++n) CHECK(modified_beta(n, q) == modified_beta_closed(n, q));
  }
}

TEST_CASE("tables are memoized and extend on demand") {
  BetaTable t(BetaKind::kCarlitz, QParam::formal(Rational(2)));
  CHECK(t.size() == 1);
  t.extend_to(5);
  CHECK(t.size() == 6);
  CHECK(t.rational(3) == Rational(-2, 105));
  CHECK_THROWS_AS(t.symbolic(9), std::out_of_range);
  BetaTable m(BetaKind::kModified, QParam::formal(Rational(6)));
  m.extend_to(2);
  CHECK_THROWS(m.rational(1));
  CHECK_THROWS_AS(BetaTable(BetaKind::kClassical, QParam::formal(Rational(2))), std::invalid_argument);
}

TEST_CASE("kind names") {
  for (BetaKind k : {BetaKind::kClassical, BetaKind::kCarlitz, BetaKind::kModified, BetaKind::kModifiedInverseQ}) {
    CHECK(parse_beta_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_beta_kind("euler"), std::invalid_argument);
}

TEST_CASE("classical limits") {
  const Rational q = 1 - Rational(1, 10000);
  const Real lnq = log(to_real(q));
  const QParam qp = QParam::real(q);
  CHECK(abs(evaluate(modified_beta(1, qp), lnq) + Real("0.5")) < Real("1e-4"));
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(abs(evaluate(modified_beta(n, qp), lnq) - to_real(classical_bernoulli(n))) < Real("1e-3"));
    CHECK(abs(to_real(carlitz_beta(n, qp)) - to_real(classical_bernoulli(n))) < Real("1e-3"));
  }
}

TEST_CASE("classical limit is monotone in q -> 1") {
  for (unsigned n = 1; n <= 8; ++n) {
    Real previous = -1;
    Real previous_carlitz = -1;
    for (int k = 3; k <= 6; ++k) {
      const Rational q = 1 - Rational(1) / pow(Rational(10), k);
      const QParam qp = QParam::real(q);
      const Real err = abs(evaluate(modified_beta(n, qp), log(to_real(q))) - to_real(classical_bernoulli(n)));
      const Real err_c = abs(to_real(carlitz_beta(n, qp)) - to_real(classical_bernoulli(n)));
      if (k > 3) {
        CHECK(err < previous);
        CHECK(err_c < previous_carlitz);
      }
      previous = err;
      previous_carlitz = err_c;
    }
  }
}
