#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbern/identity_report.hpp"

namespace qbern {

struct RunConfig {
  std::uint64_t p = 5;
  std::string q = "6";
  int precision = 8;
  int level = 4;
  /// Highest level the Riemann-sum escalation may reach.
  int max_level = 12;
  /// Minimum relative digits two consecutive levels must share before a value is trusted.
  int min_agreeing_digits = 4;
  unsigned max_m = 3;
  unsigned max_n = 3;
  /// Closed form against recurrence runs up to this index.
  unsigned max_beta = 20;
  std::string real_q = "1/2";
  /// Real q used for the classical-limit checks.
  std::string limit_q = "9999/10000";
  std::string limit_tolerance = "1e-3";
  unsigned terms = 200;
  std::string tolerance = "1e-12";
  /// Empty selects every suite.
  std::vector<std::string> suites;
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
};

/// Every suite name, in run order.
const std::vector<std::string>& suite_names();

/// Throws ConfigError for malformed or inadmissible values and ResourceError
/// when the starting level is beyond the point cap.
void validate(const RunConfig& config);

/// Reads a JSON object whose keys mirror the RunConfig fields. Unknown keys
/// are rejected. Fields absent from the file keep the values in `base`.
RunConfig load_config(const std::string& path, RunConfig base = {});

struct SuiteEntry {
  std::string suite;
  IdentityReport report;
};

/// A place where a printed formula disagrees with the definitions it is derived from.
struct Erratum {
  std::string id;
  std::string description;
  std::string printed;
  std::string computed;
  std::string residual;
  bool triggered = false;
};

struct SuiteResult {
  RunConfig config;
  std::vector<SuiteEntry> entries;
  std::vector<Erratum> errata;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t informative = 0;

  bool ok() const noexcept { return fail == 0; }
};

/// Runs the selected suites. Work items may run on `config.jobs` threads;
/// results are assembled in a fixed order, so the output does not depend on it.
SuiteResult run_suite(const RunConfig& config);

/// The errata ledger for a configuration, independent of the suite selection.
std::vector<Erratum> collect_errata(const RunConfig& config);

std::string to_json(const SuiteResult& result);
std::string to_csv(const SuiteResult& result);

}  // namespace qbern
