#include "qbern/log_laurent.hpp"

#include <algorithm>

namespace qbern {

LogLaurent::LogLaurent(const Rational& constant) {
  if (constant != 0) coeffs_.emplace(0, constant);
}

LogLaurent LogLaurent::monomial(const Rational& c, int degree) {
  LogLaurent out;
  if (c != 0) out.coeffs_.emplace(degree, c);
  return out;
}

Rational LogLaurent::coefficient(int degree) const {
  const auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int LogLaurent::min_degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero Laurent polynomial");
  return coeffs_.begin()->first;
}

int LogLaurent::max_degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero Laurent polynomial");
  return coeffs_.rbegin()->first;
}

void LogLaurent::prune() {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

LogLaurent LogLaurent::operator-() const {
  LogLaurent out = *this;
  for (auto& [d, c] : out.coeffs_) c = -c;
  return out;
}

LogLaurent& LogLaurent::operator+=(const LogLaurent& b) {
  for (const auto& [d, c] : b.coeffs_) coeffs_[d] += c;
  prune();
  return *this;
}

LogLaurent& LogLaurent::operator-=(const LogLaurent& b) {
  for (const auto& [d, c] : b.coeffs_) coeffs_[d] -= c;
  prune();
  return *this;
}

LogLaurent operator*(const LogLaurent& a, const LogLaurent& b) {
  LogLaurent out;
  for (const auto& [da, ca] : a.coeffs_) {
    for (const auto& [db, cb] : b.coeffs_) out.coeffs_[da + db] += ca * cb;
  }
  out.prune();
  return out;
}

LogLaurent LogLaurent::negate_log() const {
  LogLaurent out = *this;
  for (auto& [d, c] : out.coeffs_) {
    if (d % 2 != 0) c = -c;
  }
  return out;
}

std::string LogLaurent::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : coeffs_) {
    std::string term = qbern::to_string(c);
    if (d == 1) {
      term += "·L";
    } else if (d != 0) {
      term += "·L^" + std::to_string(d);
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

PadicNumber evaluate(const LogLaurent& a, const PadicNumber& log_value) {
  const PadicContext& ctx = log_value.context();
  PadicNumber sum = PadicNumber::zero(ctx);
  if (a.is_zero()) return sum;
  if (a.min_degree() < 0 && log_value.is_zero()) {
    throw std::domain_error("negative powers of L at L = 0");
  }
  for (const auto& [d, c] : a.coefficients()) {
    sum += PadicNumber::from_rational(c, ctx) * log_value.pow(d);
  }
  return sum;
}

Real evaluate(const LogLaurent& a, const Real& log_value) {
  Real sum = 0;
  if (a.is_zero()) return sum;
  if (a.min_degree() < 0 && log_value == 0) throw std::domain_error("negative powers of L at L = 0");
  for (const auto& [d, c] : a.coefficients()) {
    sum += to_real(c) * boost::multiprecision::pow(log_value, d);
  }
  return sum;
}

PadicNumber evaluate_at_log(const LogLaurent& a, const Rational& q, const PadicContext& ctx) {
  if (a.is_zero()) return PadicNumber::zero(ctx);
  constexpr int kMaxGuard = 1024;
  int guard = 4;
  for (;;) {
    const PadicContext work = ctx.with_precision(ctx.precision() + guard);
    const PadicNumber log_q = padic_log(PadicNumber::from_rational(q, work));
    const PadicNumber value = evaluate(a, log_q);
    const int have = value.is_zero() ? 0 : value.relative_precision();
    if (have >= ctx.precision() || guard >= kMaxGuard) return value.with_context(ctx);
    guard = std::min(kMaxGuard, guard + std::max(4, ctx.precision() - have + 2));
  }
}

}  // namespace qbern
