#include <doctest.h>

#include "qbern/q_calculus.hpp"

using namespace qbern;

namespace {

Real real_value(const CharacterSum& f, const Real& x, const Real& q) {
  Real sum = 0;
  for (const auto& [l, c] : f.terms()) sum += to_real(c) * pow(q, Real(l) * x);
  return sum;
}

Real bracket(const Real& x, const Real& q) { return (1 - pow(q, x)) / (1 - q); }

Real central_difference(unsigned n, const Real& x, const Real& q) {
  const Real h("1e-6");
  return (pow(bracket(x + h, q), n) - pow(bracket(x - h, q), n)) / (2 * h);
}

}  // namespace

TEST_CASE("QParam admissibility") {
  const PadicContext ctx(5, 8);
  CHECK_NOTHROW(QParam::padic(Rational(6), ctx));
  CHECK_NOTHROW(QParam::padic(Rational(7, 2), ctx));
  CHECK_THROWS_AS(QParam::padic(Rational(2), ctx), std::invalid_argument);
  CHECK_THROWS_AS(QParam::padic(Rational(1), ctx), std::invalid_argument);
  CHECK_NOTHROW(QParam::real(Rational(1, 2)));
  CHECK_THROWS_AS(QParam::real(Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(QParam::real(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(QParam::formal(Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(QParam::formal(Rational(0)), std::invalid_argument);
  const QParam q = QParam::padic(Rational(6), ctx);
  CHECK(q.inverse().value() == Rational(1, 6));
  CHECK(q.inverse().mode() == QMode::kPadic);
  CHECK(QParam::real(Rational(1, 2)).inverse().mode() == QMode::kFormal);
  CHECK_THROWS_AS(QParam::real(Rational(1, 2)).context(), std::logic_error);
}

TEST_CASE("q-brackets") {
  CHECK(q_bracket(0, Rational(2)) == 0);
  CHECK(q_bracket(3, Rational(2)) == 7);
  CHECK(q_bracket(-1, Rational(2)) == Rational(-1, 2));
  CHECK(q_bracket(4, Rational(6)) == 259);
}

TEST_CASE("character expansion of [x]_q^n matches brackets at integers") {
  const QParam q = QParam::formal(Rational(6));
  for (unsigned n = 0; n <= 6; ++n) {
    const CharacterSum f = monomial_characters(n, q);
    const CharacterSum g = inverse_monomial_characters(n, q);
    for (long x = -3; x <= 6; ++x) {
      CHECK(f.evaluate(x, q.value()) == pow(q_bracket(x, q.value()), n));
      CHECK(g.evaluate(x, q.value()) == pow(q_bracket(x, 1 / q.value()), n));
    }
  }
}

TEST_CASE("character sums: product, shift, reflection") {
  const Rational q(3);
  const CharacterSum a = CharacterSum::character(1, Rational(2)) + CharacterSum::character(0, Rational(-1));
  const CharacterSum b = CharacterSum::character(2);
  for (long x = -2; x <= 3; ++x) {
    CHECK((a * b).evaluate(x, q) == a.evaluate(x, q) * b.evaluate(x, q));
    CHECK(a.shifted(2).evaluate(x, q) == a.evaluate(x, q) * pow(q, 2 * x));
    CHECK(a.reflected().evaluate(x, q) == a.evaluate(-x, q));
    CHECK(a.scaled(Rational(1, 2)).evaluate(x, q) == a.evaluate(x, q) / 2);
  }
  CHECK((a + a.scaled(-1)).is_zero());
}

TEST_CASE("derivative of [x]_q^n carries the factor q^x") {
  const QParam q = QParam::formal(Rational(6));
  for (unsigned n = 1; n <= 5; ++n) {
    const Derivative d = monomial_derivative(n, q);
    CHECK(d.scalar == LogLaurent::monomial(Rational(static_cast<long>(n)) / 5, 1));
    CHECK(d.characters == monomial_characters(n - 1, q).shifted(1));
    // Consistent with differentiating the character expansion term by term.
    const Derivative general = derivative(monomial_characters(n, q));
    for (long x = 0; x <= 4; ++x) {
      const LogLaurent lhs = general.scalar * LogLaurent(general.characters.evaluate(x, q.value()));
      const LogLaurent rhs = d.scalar * LogLaurent(d.characters.evaluate(x, q.value()));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("finite differences at real q = 1/2") {
  const Rational qr(1, 2);
  const QParam q = QParam::real(qr);
  const Real qv = to_real(qr);
  const Real lnq = log(qv);
  const Real tol("1e-6");
  for (unsigned n = 1; n <= 4; ++n) {
    const Derivative d = monomial_derivative(n, q);
    for (const char* xs : {"0.5", "1", "2"}) {
      const Real x(xs);
      const Real numeric = central_difference(n, x, qv);
      const Real derived = evaluate(d.scalar, lnq) * real_value(d.characters, x, qv);
      CHECK(abs(derived - numeric) <= tol * abs(numeric));
      // The form n L/(q-1) [x]_q^{n-1} without q^x misses by the factor q^x.
      const Real printed = Real(n) * lnq / (qv - 1) * pow(bracket(x, qv), n - 1);
      CHECK(abs(printed - numeric) > tol * abs(numeric));
      CHECK(abs(printed * pow(qv, x) - numeric) <= tol * abs(numeric));
    }
  }
}

TEST_CASE("derivative of [x]_{q^-1}^n") {
  const Rational qr(1, 2);
  const QParam q = QParam::formal(qr);
  const Real qv = to_real(qr);
  const Real lnq = log(qv);
  const Real tol("1e-6");
  for (unsigned n = 1; n <= 4; ++n) {
    const Derivative d = derivative(inverse_monomial_characters(n, q));
    const Real qi = 1 / qv;
    for (const char* xs : {"0.5", "1", "2"}) {
      const Real x(xs);
      const Real numeric = central_difference(n, x, qi);
      CHECK(abs(evaluate(d.scalar, lnq) * real_value(d.characters, x, qv) - numeric) <= tol * abs(numeric));
      // n (-L)/(q^-1 - 1) q^{-x} [x]_{q^-1}^{n-1}
      const Real expected = Real(n) * (-lnq) / (qi - 1) * pow(qi, x) * pow(bracket(x, qi), n - 1);
      CHECK(abs(expected - numeric) <= tol * abs(numeric));
    }
  }
}
