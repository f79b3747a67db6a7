#include "qbern/bernoulli.hpp"

#include <stdexcept>

namespace qbern {

std::string_view to_string(BetaKind kind) {
  switch (kind) {
    case BetaKind::kClassical:
      return "classical";
    case BetaKind::kCarlitz:
      return "carlitz";
    case BetaKind::kModified:
      return "modified";
    case BetaKind::kModifiedInverseQ:
      return "modified-inverse-q";
  }
  return "?";
}

BetaKind parse_beta_kind(std::string_view name) {
  for (auto k : {BetaKind::kClassical, BetaKind::kCarlitz, BetaKind::kModified, BetaKind::kModifiedInverseQ}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown Bernoulli kind '" + std::string(name) + "'");
}

BetaTable::BetaTable(BetaKind kind, std::optional<QParam> q, int) : kind_(kind), q_(std::move(q)) {
  rational_.emplace_back(1);
  symbolic_.emplace_back(Rational(1));
}

BetaTable BetaTable::classical() { return BetaTable(BetaKind::kClassical, std::nullopt, 0); }

BetaTable::BetaTable(BetaKind kind, const QParam& q) : BetaTable(kind, q, 0) {
  if (kind == BetaKind::kClassical) throw std::invalid_argument("the classical table takes no q");
  const Rational base = kind == BetaKind::kModifiedInverseQ ? 1 / q.value() : q.value();
  q_powers_.emplace_back(1);
  q_powers_.push_back(base);
}

BetaTable& BetaTable::extend_to(unsigned n) {
  while (size() <= n) push_next();
  return *this;
}

const LogLaurent& BetaTable::symbolic(unsigned n) const {
  if (n >= symbolic_.size()) throw std::out_of_range("Bernoulli table not built to index " + std::to_string(n));
  return symbolic_[n];
}

const Rational& BetaTable::rational(unsigned n) const {
  if (kind_ == BetaKind::kModified || kind_ == BetaKind::kModifiedInverseQ) {
    throw std::logic_error("modified q-Bernoulli values are not rational");
  }
  if (n >= rational_.size()) throw std::out_of_range("Bernoulli table not built to index " + std::to_string(n));
  return rational_[n];
}

void BetaTable::push_next() {
  const unsigned n = size();
  if (kind_ == BetaKind::kClassical) {
    // sum_{i=0}^{n} C(n+1, i) B_i = 0
    Rational acc = 0;
    for (unsigned i = 0; i < n; ++i) acc += binomial(n + 1, i) * rational_[i];
    rational_.push_back(-acc / (n + 1));
    symbolic_.emplace_back(rational_.back());
    return;
  }

  while (q_powers_.size() <= n + 1) q_powers_.push_back(q_powers_.back() * q_powers_[1]);
  const Rational& q = q_powers_[1];

  if (kind_ == BetaKind::kCarlitz) {
    // (q^{n+1} - 1) beta_n = [n == 1] - q sum_{i<n} C(n,i) q^i beta_i
    Rational acc = 0;
    for (unsigned i = 0; i < n; ++i) acc += binomial(n, i) * q_powers_[i] * rational_[i];
    const Rational lead = q_powers_[n + 1] - 1;
    if (lead == 0) throw std::domain_error("q^{n+1} = 1: Carlitz recurrence is singular");
    rational_.push_back(((n == 1 ? Rational(1) : Rational(0)) - q * acc) / lead);
    symbolic_.emplace_back(rational_.back());
    return;
  }

  // (q^n - 1) b_n = [n == 1] L/(q - 1) - sum_{i<n} C(n,i) q^i b_i, in the
  // recurrence's own base; the inverse-q table flips L at the end.
  LogLaurent rhs = n == 1 ? LogLaurent::monomial(1 / (q - 1), 1) : LogLaurent();
  for (unsigned i = 0; i < n; ++i) {
    const LogLaurent& prev = kind_ == BetaKind::kModifiedInverseQ ? symbolic_[i].negate_log() : symbolic_[i];
    rhs -= LogLaurent(binomial(n, i) * q_powers_[i]) * prev;
  }
  const Rational lead = q_powers_[n] - 1;
  if (lead == 0) throw std::domain_error("q^n = 1: modified recurrence is singular");
  LogLaurent value = LogLaurent(1 / lead) * rhs;
  symbolic_.push_back(kind_ == BetaKind::kModifiedInverseQ ? value.negate_log() : value);
}

Rational classical_bernoulli(unsigned n) { return BetaTable::classical().extend_to(n).rational(n); }

Rational carlitz_beta(unsigned n, const QParam& q) {
  return BetaTable(BetaKind::kCarlitz, q).extend_to(n).rational(n);
}

LogLaurent modified_beta(unsigned n, const QParam& q) {
  return BetaTable(BetaKind::kModified, q).extend_to(n).symbolic(n);
}

LogLaurent modified_beta_inverse_q(unsigned n, const QParam& q) {
  return BetaTable(BetaKind::kModifiedInverseQ, q).extend_to(n).symbolic(n);
}

LogLaurent modified_beta_closed(unsigned n, const QParam& q) {
  const Rational& qv = q.value();
  const Rational one_minus_q = 1 - qv;
  const auto ln = static_cast<long>(n);
  Rational sum = 0;
  for (unsigned l = 1; l <= n; ++l) {
    const Rational sign = (l % 2 == 1) ? 1 : -1;  // (-1)^{l-1}
    sum += binomial(n, l) * sign * Rational(static_cast<long>(l)) / q_bracket(static_cast<long>(l), qv);
  }
  return LogLaurent(1 / pow(one_minus_q, ln)) + LogLaurent::monomial(sum / pow(one_minus_q, ln + 1), 1);
}

}  // namespace qbern
