#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbern/padic.hpp"
#include "qbern/real.hpp"

namespace qbern {

/// Base-p expansion p^valuation * sum digits[i] p^i, least significant first.
struct PadicDigits {
  long valuation = 0;
  std::vector<unsigned long> digits;
};

PadicDigits padic_digits(const PadicNumber& x);

enum class Verdict {
  kPass,
  kFail,
  kInformative,  // a printed variant being probed, never asserted
};

std::string_view to_string(Verdict v);

/// Outcome of one identity check. p-adic checks fill the valuation fields,
/// real checks the error fields.
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string lhs;
  std::string rhs;
  std::string residual;
  std::optional<PadicDigits> lhs_digits;
  std::optional<PadicDigits> rhs_digits;
  std::optional<long> agreement_valuation;
  std::optional<long> required_valuation;
  std::optional<Real> absolute_error;
  std::optional<Real> tolerance;
  Verdict verdict = Verdict::kInformative;
  std::string note;

  bool asserted() const noexcept { return verdict != Verdict::kInformative; }
  /// "+inf" or the decimal valuation; real errors with 15 significant digits.
  std::string agreement_text() const;
};

/// Fills lhs/rhs/residual/agreement from two p-adic sides and decides the
/// verdict against `required` (ignored when informative is set).
void set_padic_outcome(IdentityReport& report, const PadicNumber& lhs, const PadicNumber& rhs,
                       std::optional<long> required, bool informative = false);

/// Same for real sides and an absolute tolerance.
void set_real_outcome(IdentityReport& report, const Real& lhs, const Real& rhs, std::optional<Real> tolerance,
                      bool informative = false);

std::string valuation_text(long v);

}  // namespace qbern
