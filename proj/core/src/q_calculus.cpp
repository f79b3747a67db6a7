#include "qbern/q_calculus.hpp"

#include <stdexcept>

namespace qbern {

QParam QParam::formal(const Rational& q) {
  if (q == 0 || q == 1) throw std::invalid_argument("q must differ from 0 and 1");
  return QParam(q, QMode::kFormal, std::nullopt);
}

QParam QParam::padic(const Rational& q, const PadicContext& ctx) {
  if (q == 0 || q == 1) throw std::invalid_argument("q must differ from 0 and 1");
  const long required = ctx.prime() == 2 ? 2 : 1;
  if (valuation(q - 1, ctx.prime()) < required) {
    throw std::invalid_argument("q = " + to_string(q) + " is not admissible: need v_" + std::to_string(ctx.prime()) +
                                "(q - 1) >= " + std::to_string(required));
  }
  return QParam(q, QMode::kPadic, ctx);
}

QParam QParam::real(const Rational& q) {
  if (q <= 0 || q >= 1) throw std::invalid_argument("real q must lie in (0, 1), got " + to_string(q));
  return QParam(q, QMode::kReal, std::nullopt);
}

const PadicContext& QParam::context() const {
  if (!ctx_) throw std::logic_error("q parameter is not p-adic");
  return *ctx_;
}

QParam QParam::inverse() const {
  const Rational inv = 1 / q_;
  if (mode_ == QMode::kPadic) return padic(inv, *ctx_);
  return formal(inv);
}

Rational q_bracket(long x, const Rational& q) {
  if (q == 1) throw std::domain_error("[x]_q needs q != 1");
  return (1 - pow(q, x)) / (1 - q);
}

CharacterSum CharacterSum::character(long exponent, const Rational& coefficient) {
  CharacterSum out;
  if (coefficient != 0) out.terms_.emplace(exponent, coefficient);
  return out;
}

Rational CharacterSum::coefficient(long exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CharacterSum::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Rational CharacterSum::evaluate(long x, const Rational& q) const {
  Rational sum = 0;
  for (const auto& [l, c] : terms_) sum += c * pow(q, l * x);
  return sum;
}

CharacterSum& CharacterSum::operator+=(const CharacterSum& b) {
  for (const auto& [l, c] : b.terms_) terms_[l] += c;
  prune();
  return *this;
}

CharacterSum operator*(const CharacterSum& a, const CharacterSum& b) {
  CharacterSum out;
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) out.terms_[la + lb] += ca * cb;
  }
  out.prune();
  return out;
}

CharacterSum CharacterSum::scaled(const Rational& s) const {
  CharacterSum out;
  if (s == 0) return out;
  for (const auto& [l, c] : terms_) out.terms_.emplace(l, c * s);
  return out;
}

CharacterSum CharacterSum::shifted(long k) const {
  CharacterSum out;
  for (const auto& [l, c] : terms_) out.terms_.emplace(l + k, c);
  return out;
}

CharacterSum CharacterSum::reflected() const {
  CharacterSum out;
  for (const auto& [l, c] : terms_) out.terms_.emplace(-l, c);
  return out;
}

std::string CharacterSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [l, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += qbern::to_string(c) + "·q^{" + std::to_string(l) + "x}";
  }
  return out;
}

CharacterSum monomial_characters(unsigned n, const QParam& q) {
  const Rational scale = 1 / pow(1 - q.value(), static_cast<long>(n));
  CharacterSum out;
  for (unsigned l = 0; l <= n; ++l) {
    const Rational c = binomial(n, l) * (l % 2 == 0 ? 1 : -1) * scale;
    out += CharacterSum::character(static_cast<long>(l), c);
  }
  return out;
}

CharacterSum inverse_monomial_characters(unsigned n, const QParam& q) {
  return monomial_characters(n, q.inverse()).reflected();
}

Derivative derivative(const CharacterSum& f) {
  CharacterSum weighted;
  for (const auto& [l, c] : f.terms()) weighted += CharacterSum::character(l, c * l);
  return {LogLaurent::log_symbol(), weighted};
}

Derivative monomial_derivative(unsigned n, const QParam& q) {
  if (n == 0) throw std::invalid_argument("monomial_derivative needs n >= 1");
  const Rational scale = Rational(static_cast<long>(n)) / (q.value() - 1);
  return {LogLaurent::monomial(scale, 1), monomial_characters(n - 1, q).shifted(1)};
}

}  // namespace qbern
