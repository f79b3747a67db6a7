#include "qbern/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qbern/archimedean.hpp"
#include "qbern/bernoulli.hpp"
#include "qbern/convolution.hpp"
#include "qbern/errors.hpp"
#include "qbern/q_calculus.hpp"
#include "qbern/volkenborn.hpp"

namespace qbern {

namespace {

using Json = nlohmann::ordered_json;

Rational config_rational(const std::string& text, const char* field) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(field) + ": " + e.what());
  }
}

Real config_real(const std::string& text, const char* field) {
  Real x;
  try {
    x = Real(text);
  } catch (const std::exception&) {
    throw ConfigError(std::string(field) + ": not a number: \"" + text + "\"");
  }
  if (!(x > 0)) throw ConfigError(std::string(field) + " must be positive");
  return x;
}

// Everything a suite needs, parsed once.
struct Setup {
  Rational q;
  PadicContext ctx;
  QParam qp;
  DirectOptions options;
  Rational real_q;
  Rational limit_q;
  Real limit_tolerance;
  Real tolerance;
};

Setup make_setup(const RunConfig& c) {
  const Rational q = config_rational(c.q, "q");
  PadicContext ctx(c.p, c.precision);
  QParam qp = QParam::padic(q, ctx);
  DirectOptions options;
  options.min_agreeing_digits = c.min_agreeing_digits;
  options.max_level = c.max_level;
  return {q,
          ctx,
          qp,
          options,
          config_rational(c.real_q, "real_q"),
          config_rational(c.limit_q, "limit_q"),
          config_real(c.limit_tolerance, "limit_tolerance"),
          config_real(c.tolerance, "tolerance")};
}

struct Task {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> label;
  std::function<std::vector<IdentityReport>()> run;
};

IdentityReport exact_report(std::string identity, std::vector<std::pair<std::string, std::string>> parameters,
                            const LogLaurent& lhs, const LogLaurent& rhs) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.parameters = std::move(parameters);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.residual = (lhs - rhs).to_string();
  r.verdict = lhs == rhs ? Verdict::kPass : Verdict::kFail;
  r.note = "exact in Q[L, 1/L]";
  return r;
}

std::vector<std::pair<std::string, std::string>> mn_label(unsigned m, unsigned n) {
  return {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
}

void add_grid_tasks(std::vector<Task>& tasks, const std::string& suite, const RunConfig& c,
                    const std::function<std::vector<IdentityReport>(unsigned, unsigned)>& body) {
  for (unsigned m = 0; m <= c.max_m; ++m) {
    for (unsigned n = 1; n <= c.max_n; ++n) {
      tasks.push_back({suite, mn_label(m, n), [body, m, n] { return body(m, n); }});
    }
  }
}

std::vector<Task> build_tasks(const RunConfig& c, const Setup& s) {
  std::set<std::string> selected(c.suites.begin(), c.suites.end());
  const auto wanted = [&](const std::string& name) { return selected.empty() || selected.count(name) > 0; };
  std::vector<Task> tasks;

  if (wanted("bernoulli")) {
    tasks.push_back({"bernoulli", {}, [c, s] {
                       std::vector<IdentityReport> out;
                       const QParam& qp = s.qp;
                       for (unsigned n = 0; n <= c.max_beta; ++n) {
                         out.push_back(exact_report("closed_form_vs_recurrence", {{"n", std::to_string(n)}},
                                                    modified_beta(n, qp), modified_beta_closed(n, qp)));
                       }
                       for (unsigned n = 0; n <= std::min(c.max_beta, 12u); ++n) {
                         out.push_back(exact_report("integral_vs_recurrence", {{"n", std::to_string(n)}},
                                                    monomial_integral(n, qp), modified_beta(n, qp)));
                       }
                       const Rational& q = s.q;
                       const std::vector<Rational> printed{1, -1 / q_bracket(2, q),
                                                           q / (q_bracket(2, q) * q_bracket(3, q))};
                       for (unsigned n = 0; n < printed.size(); ++n) {
                         out.push_back(exact_report("carlitz_printed_values",
                                                    {{"n", std::to_string(n)}, {"q", to_string(q)}},
                                                    LogLaurent(carlitz_beta(n, qp)), LogLaurent(printed[n])));
                       }
                       return out;
                     }});
  }

  if (wanted("convergence")) {
    for (unsigned n = 1; n <= 6; ++n) {
      tasks.push_back({"convergence", {{"n", std::to_string(n)}}, [c, s, n] {
                         const PadicContext ctx = s.ctx.with_precision(std::max(c.precision, c.level + 8));
                         const QParam qp = QParam::padic(s.q, ctx);
                         const PadicNumber beta = evaluate_at_log(modified_beta(n, qp), s.q, ctx);
                         const CharacterSum f = monomial_characters(n, qp);
                         std::vector<IdentityReport> out;
                         long previous = -kInfiniteValuation;
                         bool monotone = true;
                         std::string trail;
                         for (int level = 1; level <= c.level; ++level) {
                           const RiemannSumResult sum = riemann_sum(f, qp, level);
                           IdentityReport r;
                           r.identity = "riemann_sum_convergence";
                           r.parameters = {{"n", std::to_string(n)},         {"p", std::to_string(c.p)},
                                           {"q", to_string(s.q)},            {"N", std::to_string(level)},
                                           {"M", std::to_string(ctx.precision())}};
                           set_padic_outcome(r, sum.value, beta, level - 2);
                           const long v = *r.agreement_valuation;
                           monotone = monotone && v >= previous;
                           previous = v;
                           trail += (trail.empty() ? "" : ",") + valuation_text(v);
                           out.push_back(std::move(r));
                         }
                         IdentityReport mono;
                         mono.identity = "riemann_sum_monotone";
                         mono.parameters = {{"n", std::to_string(n)}, {"p", std::to_string(c.p)}, {"q", to_string(s.q)}};
                         mono.lhs = trail;
                         mono.rhs = "nondecreasing";
                         mono.verdict = monotone ? Verdict::kPass : Verdict::kFail;
                         out.push_back(std::move(mono));
                         return out;
                       }});
    }
  }

  if (wanted("expansion")) {
    add_grid_tasks(tasks, "expansion", c, [s](unsigned m, unsigned n) {
      std::vector<IdentityReport> out;
      out.push_back(exact_report("double_integral_expansion", mn_label(m, n), double_integral(m, n, s.qp),
                                 double_integral_characters(m, n, s.qp)));
      return out;
    });
  }

  if (wanted("convolution-identity")) {
    add_grid_tasks(tasks, "convolution-identity", c, [c, s](unsigned m, unsigned n) {
      return std::vector<IdentityReport>{convolution_identity_check(m, n, s.qp, c.level, s.options),
                                         convolution_identity_printed_probe(m, n, s.qp, c.level, s.options)};
    });
  }

  if (wanted("closed-form")) {
    add_grid_tasks(tasks, "closed-form", c, [c, s](unsigned m, unsigned n) {
      std::vector<IdentityReport> out{closed_form_derivative_check(m, n, s.qp, c.level, s.options)};
      for (IndexConvention convention : {IndexConvention::kSame, IndexConvention::kShifted}) {
        IdentityReport r = closed_form_check(m, n, s.qp, c.level, convention, s.options);
        r.verdict = Verdict::kInformative;
        out.push_back(std::move(r));
      }
      return out;
    });
  }

  if (wanted("symmetry")) {
    add_grid_tasks(tasks, "symmetry", c,
                   [c, s](unsigned m, unsigned n) { return symmetry_report(m, n, s.qp, c.level, s.options); });
  }

  if (wanted("valuation")) {
    add_grid_tasks(tasks, "valuation", c, [c, s](unsigned m, unsigned n) {
      std::vector<IdentityReport> out;
      const StabilizedValue sv = a_direct(m, n, s.qp, c.level, s.options);
      IdentityReport r;
      r.identity = "valuation_bound";
      r.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"p", std::to_string(c.p)},
                      {"q", to_string(s.q)},    {"N", std::to_string(sv.level)}};
      const long v = sv.value.valuation();
      r.lhs = "v_p(A) = " + valuation_text(v);
      r.rhs = "-2";
      r.residual = sv.value.to_string();
      r.lhs_digits = padic_digits(sv.value);
      r.agreement_valuation = v;
      r.required_valuation = -2;
      r.verdict = v >= -2 ? Verdict::kPass : Verdict::kFail;
      out.push_back(std::move(r));
      return out;
    });
  }

  if (wanted("limits")) {
    tasks.push_back({"limits", {}, [s] {
                       std::vector<IdentityReport> out;
                       for (unsigned n = 1; n <= 8; ++n) {
                         out.push_back(classical_limit_modified(n, s.limit_q, s.limit_tolerance));
                         out.push_back(classical_limit_carlitz(n, s.limit_q, s.limit_tolerance));
                       }
                       return out;
                     }});
  }

  if (wanted("series")) {
    tasks.push_back({"series", {}, [c, s] {
                       const RealEvalContext rc = RealEvalContext::make(s.real_q, c.terms, s.tolerance);
                       std::vector<IdentityReport> out;
                       for (unsigned n = 1; n <= 8; ++n) {
                         for (IdentityReport& r : series_residual(n, rc)) out.push_back(std::move(r));
                         out.push_back(series_core_check(n, rc));
                       }
                       for (unsigned k = 1; k <= 8; ++k) out.push_back(genfun_coefficient_check(k, rc));
                       out.push_back(genfun_constant_term_probe(rc));
                       out.push_back(genfun_exponent_probe(rc));
                       return out;
                     }});
  }
  return tasks;
}

std::vector<IdentityReport> run_task(const Task& task) {
  try {
    return task.run();
  } catch (const InsufficientPrecision& e) {
    IdentityReport r;
    r.identity = "insufficient_precision";
    r.parameters = task.label;
    r.verdict = Verdict::kFail;
    r.note = e.what();
    return {r};
  }
}

std::vector<std::vector<IdentityReport>> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<IdentityReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = run_task(tasks[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::string padic_agreement_text(const PadicNumber& lhs, const PadicNumber& rhs, long trusted) {
  return "v_p(difference) = " + valuation_text(agreement(lhs, rhs)) + ", trusted digits " + valuation_text(trusted);
}

bool padic_disagrees(const PadicNumber& lhs, const PadicNumber& rhs, long trusted) {
  return trusted != kInfiniteValuation && agreement(lhs, rhs) < trusted - 1;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bernoulli", "convergence", "expansion", "convolution-identity",
                                              "closed-form", "symmetry",    "valuation", "limits",
                                              "series"};
  return names;
}

void validate(const RunConfig& c) {
  if (c.p < 2 || !is_prime(c.p)) throw ConfigError("p must be prime, got " + std::to_string(c.p));
  if (c.p == 2) throw ConfigError("p = 2 is not supported");
  if (c.precision < 4 || c.precision > 4096) throw ConfigError("precision must lie in [4, 4096]");
  if (c.level < 1) throw ConfigError("level must be at least 1");
  const CostLimits limits;
  std::uint64_t size = 1;
  for (int i = 0; i < c.level; ++i) {
    if (size > limits.max_points / c.p) {
      throw ResourceError("level " + std::to_string(c.level) + " exceeds the point cap for p = " + std::to_string(c.p));
    }
    size *= c.p;
  }
  if (c.max_level < c.level) throw ConfigError("max_level must not be below level");
  if (c.min_agreeing_digits < 1) throw ConfigError("min_agreeing_digits must be positive");
  if (c.max_n < 1) throw ConfigError("max_n must be at least 1");
  if (c.max_m > 32 || c.max_n > 32 || c.max_beta > 200) throw ConfigError("grid bounds too large");
  if (c.terms < 1) throw ConfigError("terms must be positive");
  if (c.jobs < 1) throw ConfigError("jobs must be positive");
  if (c.format != "json" && c.format != "csv") throw ConfigError("format must be json or csv");
  for (const std::string& name : c.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw ConfigError("unknown suite \"" + name + "\"");
    }
  }
  try {
    const Setup s = make_setup(c);
    RealEvalContext::make(s.real_q, c.terms, s.tolerance);
    RealEvalContext::make(s.limit_q, 1, s.limit_tolerance);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config " + path + " must hold a JSON object");
  const auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "p") base.p = v.get<std::uint64_t>();
      else if (key == "q") base.q = text(v);
      else if (key == "precision") base.precision = v.get<int>();
      else if (key == "level") base.level = v.get<int>();
      else if (key == "max_level") base.max_level = v.get<int>();
      else if (key == "min_agreeing_digits") base.min_agreeing_digits = v.get<int>();
      else if (key == "max_m") base.max_m = v.get<unsigned>();
      else if (key == "max_n") base.max_n = v.get<unsigned>();
      else if (key == "max_beta") base.max_beta = v.get<unsigned>();
      else if (key == "real_q") base.real_q = text(v);
      else if (key == "limit_q") base.limit_q = text(v);
      else if (key == "limit_tolerance") base.limit_tolerance = text(v);
      else if (key == "terms") base.terms = v.get<unsigned>();
      else if (key == "tolerance") base.tolerance = text(v);
      else if (key == "suites") base.suites = v.get<std::vector<std::string>>();
      else if (key == "format") base.format = v.get<std::string>();
      else if (key == "out") base.out = v.get<std::string>();
      else if (key == "jobs") base.jobs = v.get<unsigned>();
      else throw ConfigError("config " + path + ": unknown key \"" + key + "\"");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  return base;
}

std::vector<Erratum> collect_errata(const RunConfig& c) {
  const Setup s = make_setup(c);
  const Rational& q = s.q;
  std::vector<Erratum> out;

  {
    const Rational printed = (1 - q) / (q_bracket(3, q) * q_bracket(4, q));
    const Rational computed = carlitz_beta(3, s.qp);
    out.push_back({"carlitz-beta3-printed-value",
                   "printed beta_{3,q} = (1-q)/([3]_q [4]_q) against the Carlitz recurrence at q = " + to_string(q),
                   to_string(printed), to_string(computed), to_string(computed - printed), printed != computed});
  }
  {
    // z = 3, x = 1: the expansion [z]_q - q^{-1} q^z [x]_{q^{-1}} gives [z - x]_q, not [z - x]_{q^{-1}}.
    const Rational printed = q_bracket(2, 1 / q);
    const Rational computed = q_bracket(3, q) - pow(q, 2) * q_bracket(1, 1 / q);
    out.push_back({"difference-bracket-base",
                   "expansion labelled [z-x]_{q^-1} evaluated at z = 3, x = 1; it equals [2]_q = " +
                       to_string(q_bracket(2, q)),
                   to_string(printed), to_string(computed), to_string(computed - printed), printed != computed});
  }
  {
    const QParam formal = QParam::formal(q);
    const CharacterSum printed = monomial_characters(1, formal);
    const Derivative truth = monomial_derivative(2, formal);
    const CharacterSum diff = truth.characters + printed.scaled(-1);
    out.push_back({"monomial-derivative",
                   "d/dx [x]_q^2 = 2L/(q-1) times the character sum shown; printed omits the factor q^x",
                   printed.to_string(), truth.characters.to_string(), diff.to_string(), !diff.is_zero()});
  }
  {
    const unsigned m = 1, n = 2;
    const StabilizedValue a = a_direct(m, n - 1, s.qp, c.level, s.options);
    const PadicNumber scalar = evaluate_at_log(
        LogLaurent::monomial(Rational(static_cast<long>(n)) / (q - 1), 1), q, s.ctx);
    const PadicNumber lhs = scalar * a.value;
    const PadicNumber rhs = evaluate_at_log(
        double_integral(m, n, s.qp) - modified_beta_inverse_q(m, s.qp) * modified_beta(n, s.qp), q, s.ctx);
    const long trusted = scalar.valuation() + a.trusted_precision;
    out.push_back({"convolution-index-offset",
                   "n L/(q-1) A_{m,n-1} against the double integral minus beta~_{m,q^-1} beta~_{n,q} at m = 1, n = 2",
                   lhs.to_string(), rhs.to_string(), padic_agreement_text(lhs, rhs, trusted),
                   padic_disagrees(lhs, rhs, trusted)});
  }
  {
    const IdentityReport r = convolution_identity_printed_probe(1, 1, s.qp, c.level, s.options);
    const IdentityReport good = convolution_identity_check(1, 1, s.qp, c.level, s.options);
    const bool off = r.agreement_valuation && good.required_valuation &&
                     *r.agreement_valuation < *good.required_valuation;
    out.push_back({"convolution-printed-derivative",
                   "n L/(q-1) A_{m,n} (derivative without q^x) against the double integral minus the beta product, m = n = 1",
                   r.lhs, r.rhs, "v_p(difference) = " + r.agreement_text(), off});
  }
  {
    const unsigned m = 1, n = 1;
    const StabilizedValue same = a_direct(m, n, s.qp, c.level, s.options);
    const StabilizedValue shifted = a_direct(m, n + 1, s.qp, c.level, s.options);
    const StabilizedValue corrected = convolution_integral(m, n - 1, 1, s.qp, c.level, s.options);
    const PadicNumber closed = evaluate_at_log(a_closed(m, n, s.qp), q, s.ctx);
    const long trusted = std::min({same.trusted_precision, shifted.trusted_precision, corrected.trusted_precision});
    const bool off = padic_disagrees(closed, same.value, trusted) && padic_disagrees(closed, shifted.value, trusted);
    out.push_back({"closed-form-index",
                   "closed form at m = n = 1 against A_{1,1}, A_{1,2} and I_0([z]_{q^-1} ⊛ q^z)",
                   closed.to_string(), corrected.value.to_string(),
                   "v_p against A_{1,1}: " + valuation_text(agreement(closed, same.value)) +
                       "; against A_{1,2}: " + valuation_text(agreement(closed, shifted.value)) +
                       "; against the q^z-weighted convolution: " +
                       valuation_text(agreement(closed, corrected.value)),
                   off});
  }
  {
    // Summation index of the last beta factor: printed m+k-l, derived n+k-l (m = 3, n = 2).
    const unsigned m = 3, n = 2;
    BetaTable betas(BetaKind::kModified, s.qp);
    betas.extend_to(m + n);
    BetaTable inverse_betas(BetaKind::kModifiedInverseQ, s.qp);
    inverse_betas.extend_to(m + n);
    LogLaurent printed, derived;
    for (unsigned l = 1; l <= n; ++l) {
      Rational qm1_power = 1;
      for (unsigned k = 0; k <= l; ++k) {
        const Rational cf = binomial(n, l) * binomial(l, k) * (l % 2 == 0 ? 1 : -1) * qm1_power /
                            pow(q, static_cast<long>(l));
        const LogLaurent outer = LogLaurent(cf) * inverse_betas.symbolic(m + l);
        printed += outer * betas.symbolic(m + k - l);
        derived += outer * betas.symbolic(n + k - l);
        qm1_power *= q - 1;
      }
    }
    out.push_back({"expansion-sign-and-index",
                   "final expansion line with beta~_{m+k-l,q} as printed against beta~_{n+k-l,q}, m = 3, n = 2",
                   printed.to_string(), derived.to_string(), (printed - derived).to_string(), printed != derived});
  }
  {
    const unsigned m = 0, n = 2;
    const StabilizedValue x = a_direct(m, n, s.qp, c.level, s.options);
    const StabilizedValue y = a_direct(n - 1, m + 1, s.qp, c.level, s.options);
    const long trusted = std::min(x.trusted_precision, y.trusted_precision);
    out.push_back({"same-q-symmetry", "A^q_{0,2} against A^q_{1,1}; the q^{-1} form A^{1/q}_{1,1} is the one that holds",
                   x.value.to_string(), y.value.to_string(), padic_agreement_text(x.value, y.value, trusted),
                   padic_disagrees(x.value, y.value, trusted)});
  }

  const RealEvalContext rc = RealEvalContext::make(s.real_q, c.terms, s.tolerance);
  {
    const unsigned n = 2;
    const std::vector<IdentityReport> reports = series_residual(n, rc);
    const IdentityReport& printed = reports[1];
    out.push_back({"series-constant",
                   "beta~_2 against 2 ln q/(1-q) sum_{m>=1} q^m [m]_q; the gap is (1-q)^{-2}",
                   printed.rhs, printed.lhs, printed.residual, !(*printed.absolute_error < s.tolerance)});
  }
  {
    const IdentityReport r = genfun_constant_term_probe(rc);
    out.push_back({"generating-function-constant-term", "constant term ln q/(1-q)^2 against beta~_0 = 1", r.rhs,
                   r.lhs, r.residual, !(*r.absolute_error < s.tolerance)});
  }
  {
    const IdentityReport r = genfun_exponent_probe(rc);
    out.push_back({"generating-function-exponent",
                   "t coefficient with exponent ([m]_q)^t against beta~_1; the derivation needs [m]_q t", r.rhs,
                   r.lhs, r.residual, !(*r.absolute_error < s.tolerance)});
  }
  return out;
}

SuiteResult run_suite(const RunConfig& config) {
  validate(config);
  const Setup setup = make_setup(config);
  const std::vector<Task> tasks = build_tasks(config, setup);
  std::vector<std::vector<IdentityReport>> results = run_tasks(tasks, config.jobs);

  SuiteResult result;
  result.config = config;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    for (IdentityReport& r : results[i]) {
      switch (r.verdict) {
        case Verdict::kPass:
          ++result.pass;
          break;
        case Verdict::kFail:
          ++result.fail;
          break;
        case Verdict::kInformative:
          ++result.informative;
          break;
      }
      result.entries.push_back({tasks[i].suite, std::move(r)});
    }
  }
  result.errata = collect_errata(config);
  return result;
}

namespace {

Json digits_json(const PadicDigits& d) {
  Json j;
  j["valuation"] = valuation_text(d.valuation);
  j["digits"] = d.digits;
  return j;
}

Json config_json(const RunConfig& c) {
  Json j;
  j["p"] = std::to_string(c.p);
  j["q"] = c.q;
  j["precision"] = std::to_string(c.precision);
  j["level"] = std::to_string(c.level);
  j["max_level"] = std::to_string(c.max_level);
  j["min_agreeing_digits"] = std::to_string(c.min_agreeing_digits);
  j["max_m"] = std::to_string(c.max_m);
  j["max_n"] = std::to_string(c.max_n);
  j["max_beta"] = std::to_string(c.max_beta);
  j["real_q"] = c.real_q;
  j["limit_q"] = c.limit_q;
  j["limit_tolerance"] = c.limit_tolerance;
  j["terms"] = std::to_string(c.terms);
  j["tolerance"] = c.tolerance;
  j["suites"] = c.suites.empty() ? suite_names() : c.suites;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string parameter_text(const std::vector<std::pair<std::string, std::string>>& parameters) {
  std::string out;
  for (const auto& [k, v] : parameters) out += (out.empty() ? "" : ";") + k + "=" + v;
  return out;
}

}  // namespace

std::string to_json(const SuiteResult& result) {
  Json j;
  j["config"] = config_json(result.config);
  Json reports = Json::array();
  for (const SuiteEntry& e : result.entries) {
    const IdentityReport& r = e.report;
    Json row;
    row["suite"] = e.suite;
    row["identity"] = r.identity;
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    row["parameters"] = params;
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["residual"] = r.residual;
    if (r.lhs_digits) row["lhs_padic"] = digits_json(*r.lhs_digits);
    if (r.rhs_digits) row["rhs_padic"] = digits_json(*r.rhs_digits);
    row["agreement"] = r.agreement_text();
    if (r.required_valuation) row["required"] = valuation_text(*r.required_valuation);
    if (r.tolerance) row["tolerance"] = format_real(*r.tolerance);
    row["verdict"] = std::string(to_string(r.verdict));
    row["note"] = r.note;
    reports.push_back(std::move(row));
  }
  j["reports"] = std::move(reports);
  Json errata = Json::array();
  for (const Erratum& e : result.errata) {
    errata.push_back({{"id", e.id},
                      {"description", e.description},
                      {"printed", e.printed},
                      {"computed", e.computed},
                      {"residual", e.residual},
                      {"triggered", e.triggered}});
  }
  j["errata"] = std::move(errata);
  j["summary"] = {{"pass", std::to_string(result.pass)},
                  {"fail", std::to_string(result.fail)},
                  {"informative", std::to_string(result.informative)}};
  return j.dump(2) + "\n";
}

std::string to_csv(const SuiteResult& result) {
  std::ostringstream os;
  os << "section,suite,identity,parameters,lhs,rhs,residual,agreement,required,verdict,note\n";
  for (const SuiteEntry& e : result.entries) {
    const IdentityReport& r = e.report;
    std::string required;
    if (r.required_valuation) required = valuation_text(*r.required_valuation);
    if (r.tolerance) required = format_real(*r.tolerance);
    os << "report," << csv_field(e.suite) << ',' << csv_field(r.identity) << ',' << csv_field(parameter_text(r.parameters))
       << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << csv_field(r.residual) << ','
       << csv_field(r.agreement_text()) << ',' << csv_field(required) << ',' << to_string(r.verdict) << ','
       << csv_field(r.note) << '\n';
  }
  for (const Erratum& e : result.errata) {
    os << "erratum,," << csv_field(e.id) << ",," << csv_field(e.printed) << ',' << csv_field(e.computed) << ','
       << csv_field(e.residual) << ",,," << (e.triggered ? "triggered" : "consistent") << ','
       << csv_field(e.description) << '\n';
  }
  os << "summary,,,,,,,,,pass=" << result.pass << ";fail=" << result.fail << ";informative=" << result.informative
     << ",\n";
  return os.str();
}

}  // namespace qbern
