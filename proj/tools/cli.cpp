#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbern/bernoulli.hpp"
#include "qbern/convolution.hpp"
#include "qbern/errors.hpp"
#include "qbern/q_calculus.hpp"
#include "qbern/suite.hpp"
#include "qbern/volkenborn.hpp"

namespace qbern::cli {

namespace {

using Json = nlohmann::ordered_json;

// Options bound to a scratch RunConfig; after parsing, the ones actually given
// are copied over whatever --config loaded.
class ConfigOptions {
 public:
  void bind(CLI::App& app, std::initializer_list<std::string_view> names) {
    for (std::string_view name : names) add(app, name);
    app.add_option("--config", config_path_, "JSON file with run settings; flags override it");
  }

  RunConfig resolve() const {
    RunConfig merged = config_path_.empty() ? RunConfig{} : load_config(config_path_);
    for (const auto& [option, apply] : appliers_) {
      if (option->count() > 0) apply(merged);
    }
    return merged;
  }

 private:
  template <typename T>
  void option(CLI::App& app, const std::string& flag, T RunConfig::*field, const std::string& help) {
    CLI::Option* opt = app.add_option(flag, scratch_.*field, help);
    appliers_.emplace_back(opt, [this, field](RunConfig& c) { c.*field = scratch_.*field; });
    last_ = opt;
  }

  void add(CLI::App& app, std::string_view name) {
    if (name == "p") option(app, "--p", &RunConfig::p, "prime p");
    else if (name == "q") option(app, "--q", &RunConfig::q, "q as a rational a/b");
    else if (name == "precision") option(app, "--precision", &RunConfig::precision, "p-adic precision M (digits)");
    else if (name == "level") option(app, "--level", &RunConfig::level, "Riemann-sum level N");
    else if (name == "max-level") option(app, "--max-level", &RunConfig::max_level, "highest escalation level");
    else if (name == "max-m") option(app, "--max-m", &RunConfig::max_m, "grid bound for m");
    else if (name == "max-n") option(app, "--max-n", &RunConfig::max_n, "grid bound for n");
    else if (name == "terms") option(app, "--terms", &RunConfig::terms, "series terms M for real q");
    else if (name == "tol") option(app, "--tol", &RunConfig::tolerance, "absolute tolerance for real checks");
    else if (name == "real-q") option(app, "--real-q", &RunConfig::real_q, "real q in (0,1)");
    else if (name == "jobs") option(app, "--jobs", &RunConfig::jobs, "worker threads");
    else if (name == "out") option(app, "--out", &RunConfig::out, "output file (default: standard output)");
    else if (name == "suite") {
      option(app, "--suite", &RunConfig::suites, "comma-separated suite names");
      last_->delimiter(',');
    } else if (name == "format") {
      option(app, "--format", &RunConfig::format, "json or csv");
      last_->check(CLI::IsMember({"json", "csv"}));
    }
  }

  RunConfig scratch_;
  std::string config_path_;
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> appliers_;
  CLI::Option* last_ = nullptr;
};

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + c.out);
  file << text;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string& s = cells[i];
    if (i) line += ',';
    if (s.find_first_of(",\"\n") == std::string::npos) {
      line += s;
    } else {
      line += '"';
      for (char ch : s) line += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      line += '"';
    }
  }
  return line + "\n";
}

Json padic_json(const PadicNumber& x) {
  const PadicDigits d = padic_digits(x);
  return {{"text", x.to_string()}, {"valuation", valuation_text(d.valuation)}, {"digits", d.digits}};
}

std::string render(const Json& doc, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                   const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::string text = csv_row(header);
  for (const auto& r : rows) text += csv_row(r);
  return text;
}

// The q used by table commands: p-adic when admissible for p, real when in (0,1), formal otherwise.
QParam table_q(const Rational& q, const PadicContext& ctx) {
  try {
    return QParam::padic(q, ctx);
  } catch (const std::invalid_argument&) {
  }
  if (q > 0 && q < 1) return QParam::real(q);
  return QParam::formal(q);
}

int cmd_beta(const RunConfig& c, const std::string& kind_name, std::ostream& out) {
  const BetaKind kind = parse_beta_kind(kind_name);
  if (c.max_n > 500) throw ConfigError("max-n too large for a table");
  Json doc;
  doc["command"] = "beta";
  doc["kind"] = std::string(to_string(kind));
  std::vector<std::vector<std::string>> rows;
  Json jrows = Json::array();

  std::optional<BetaTable> table;
  std::optional<QParam> q;
  std::optional<PadicContext> ctx;
  if (kind == BetaKind::kClassical) {
    table = BetaTable::classical();
  } else {
    if (!is_prime(c.p)) throw ConfigError("p must be prime");
    ctx = PadicContext(c.p, c.precision);
    q = table_q(parse_rational(c.q), *ctx);
    doc["q"] = to_string(q->value());
    doc["p"] = std::to_string(c.p);
    table = BetaTable(kind, *q);
  }
  table->extend_to(c.max_n);
  for (unsigned n = 0; n <= c.max_n; ++n) {
    Json row;
    row["n"] = std::to_string(n);
    const bool rational = kind == BetaKind::kClassical || kind == BetaKind::kCarlitz;
    const std::string value = rational ? to_string(table->rational(n)) : table->symbolic(n).to_string();
    row["value"] = value;
    std::string padic_text, real_text;
    if (!rational && q && q->mode() == QMode::kPadic) {
      const PadicNumber v = evaluate_at_log(table->symbolic(n), q->value(), *ctx);
      row["padic"] = padic_json(v);
      padic_text = v.to_string();
    }
    if (!rational && q && q->mode() == QMode::kReal) {
      const Real lnq = log(to_real(q->value()));
      const Real v = evaluate(table->symbolic(n), lnq);
      real_text = format_real(v);
      row["real"] = real_text;
    }
    jrows.push_back(std::move(row));
    rows.push_back({std::to_string(n), std::string(to_string(kind)), value, padic_text, real_text});
  }
  doc["rows"] = std::move(jrows);
  emit(c, render(doc, {"n", "kind", "value", "padic", "real"}, rows, c.format), out);
  return kOk;
}

CharacterSum parse_function(const std::string& text, const QParam& q) {
  std::smatch match;
  static const std::regex bracket(R"(bracket\^(\d{1,3}))");
  static const std::regex character(R"(character\((-?\d{1,6})\))");
  if (std::regex_match(text, match, bracket)) return monomial_characters(std::stoul(match[1]), q);
  if (std::regex_match(text, match, character)) return CharacterSum::character(std::stol(match[1]));
  throw ConfigError("function must be bracket^n or character(l), got \"" + text + "\"");
}

int cmd_volkenborn(const RunConfig& c, const std::string& function, std::ostream& out) {
  validate(c);
  const PadicContext ctx(c.p, c.precision);
  const QParam q = QParam::padic(parse_rational(c.q), ctx);
  const CharacterSum f = parse_function(function, q);
  const ConvergenceProfile profile = convergence_profile(f, q, 1, c.level);

  Json doc;
  doc["command"] = "volkenborn";
  doc["f"] = function;
  doc["p"] = std::to_string(c.p);
  doc["q"] = c.q;
  doc["exact_integral"] = integrate(f, q.value()).to_string();
  Json levels = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < profile.levels.size(); ++i) {
    Json row;
    row["N"] = std::to_string(profile.levels[i]);
    row["value"] = padic_json(profile.values[i]);
    const std::string delta = i == 0 ? "" : valuation_text(profile.deltas[i - 1]);
    row["delta_valuation"] = delta;
    levels.push_back(std::move(row));
    rows.push_back({function, std::to_string(profile.levels[i]), profile.values[i].to_string(), delta});
  }
  doc["levels"] = std::move(levels);
  doc["stabilized_value"] = padic_json(profile.stabilized_value);
  doc["stabilized_digits"] = valuation_text(profile.stabilized_digits);
  emit(c, render(doc, {"f", "N", "value", "delta_valuation"}, rows, c.format), out);
  return kOk;
}

int cmd_amn(const RunConfig& c, std::ostream& out) {
  validate(c);
  const PadicContext ctx(c.p, c.precision);
  const QParam q = QParam::padic(parse_rational(c.q), ctx);
  DirectOptions options;
  options.max_level = c.max_level;
  options.min_agreeing_digits = c.min_agreeing_digits;

  Json doc;
  doc["command"] = "amn";
  doc["p"] = std::to_string(c.p);
  doc["q"] = c.q;
  Json grid = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (unsigned m = 0; m <= c.max_m; ++m) {
    for (unsigned n = 1; n <= c.max_n; ++n) {
      const AmnValue a = amn_value(m, n, q, c.level, options);
      const long v = a.direct.value.valuation();
      const std::string agree = valuation_text(agreement(a.direct.value, a.closed_evaluated));
      const std::string bound = v >= -2 ? "true" : "false";
      Json row;
      row["m"] = std::to_string(m);
      row["n"] = std::to_string(n);
      row["direct"] = padic_json(a.direct.value);
      row["level"] = std::to_string(a.direct.level);
      row["trusted_digits"] = valuation_text(a.direct.trusted_precision);
      row["closed"] = a.closed.to_string();
      row["closed_evaluated"] = padic_json(a.closed_evaluated);
      row["agreement"] = agree;
      row["valuation_bound"] = bound;
      grid.push_back(std::move(row));
      rows.push_back({std::to_string(m), std::to_string(n), a.direct.value.to_string(), std::to_string(a.direct.level),
                      valuation_text(a.direct.trusted_precision), a.closed.to_string(), a.closed_evaluated.to_string(),
                      agree, bound});
    }
  }
  doc["rows"] = std::move(grid);
  emit(c,
       render(doc, {"m", "n", "direct", "level", "trusted_digits", "closed", "closed_evaluated", "agreement",
                    "valuation_bound"},
              rows, c.format),
       out);
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const SuiteResult result = run_suite(c);
  emit(c, c.format == "csv" ? to_csv(result) : to_json(result), out);
  err << "verify: " << result.pass << " pass, " << result.fail << " fail, " << result.informative
      << " informative\n";
  return result.ok() ? kOk : kAssertedFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-Bernoulli numbers and p-adic convolution identities"};
  app.name("qbern");
  app.require_subcommand(1);

  ConfigOptions beta_opts, volk_opts, amn_opts, verify_opts;
  std::string kind = "modified";
  std::string function = "bracket^1";

  CLI::App* beta = app.add_subcommand("beta", "Bernoulli tables");
  beta->add_option("--kind", kind, "classical, carlitz, modified or modified-inverse-q")
      ->check(CLI::IsMember({"classical", "carlitz", "modified", "modified-inverse-q"}));
  beta_opts.bind(*beta, {"p", "q", "precision", "max-n", "format", "out"});

  CLI::App* volk = app.add_subcommand("volkenborn", "Riemann-sum convergence profile");
  volk->add_option("--function", function, "bracket^n or character(l)");
  volk_opts.bind(*volk, {"p", "q", "precision", "level", "format", "out"});

  CLI::App* amn = app.add_subcommand("amn", "A_{m,n} grid, direct and closed form");
  amn_opts.bind(*amn, {"p", "q", "precision", "level", "max-level", "max-m", "max-n", "format", "out"});

  CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
  verify_opts.bind(*verify, {"p", "q", "precision", "level", "max-level", "max-m", "max-n", "terms", "tol", "real-q",
                             "suite", "format", "out", "jobs"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*beta) {
      return cmd_beta(beta_opts.resolve(), kind, out);
    }
    if (*volk) return cmd_volkenborn(volk_opts.resolve(), function, out);
    if (*amn) return cmd_amn(amn_opts.resolve(), out);
    return cmd_verify(verify_opts.resolve(), out, err);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const InsufficientPrecision& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace qbern::cli
