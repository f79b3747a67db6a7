#include "qbern/identity_report.hpp"

namespace qbern {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInformative:
      return "informative";
  }
  return "?";
}

PadicDigits padic_digits(const PadicNumber& x) {
  if (x.is_zero()) return {x.valuation(), {}};
  return {x.valuation(), x.digits()};
}

std::string valuation_text(long v) { return v == kInfiniteValuation ? "+inf" : std::to_string(v); }

std::string IdentityReport::agreement_text() const {
  if (agreement_valuation) return valuation_text(*agreement_valuation);
  if (absolute_error) return format_real(*absolute_error);
  return "";
}

void set_padic_outcome(IdentityReport& report, const PadicNumber& lhs, const PadicNumber& rhs,
                       std::optional<long> required, bool informative) {
  const PadicNumber diff = lhs - rhs;
  report.lhs = lhs.to_string();
  report.rhs = rhs.to_string();
  report.residual = diff.to_string();
  report.lhs_digits = padic_digits(lhs);
  report.rhs_digits = padic_digits(rhs);
  report.agreement_valuation = diff.valuation();
  report.required_valuation = required;
  if (informative || !required) {
    report.verdict = Verdict::kInformative;
  } else {
    report.verdict = diff.valuation() >= *required ? Verdict::kPass : Verdict::kFail;
  }
}

void set_real_outcome(IdentityReport& report, const Real& lhs, const Real& rhs, std::optional<Real> tolerance,
                      bool informative) {
  const Real err = abs(lhs - rhs);
  report.lhs = format_real(lhs);
  report.rhs = format_real(rhs);
  report.residual = format_real(lhs - rhs);
  report.absolute_error = err;
  report.tolerance = tolerance;
  if (informative || !tolerance) {
    report.verdict = Verdict::kInformative;
  } else {
    report.verdict = err < *tolerance ? Verdict::kPass : Verdict::kFail;
  }
}

}  // namespace qbern
