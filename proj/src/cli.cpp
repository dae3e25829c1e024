#include "cuspidal/cli.hpp"

#include "cuspidal/analysis.hpp"
#include "cuspidal/genfun.hpp"
#include "cuspidal/params.hpp"
#include "cuspidal/radon.hpp"
#include "cuspidal/report.hpp"
#include "cuspidal/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace cuspidal {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string format = "human";
  std::string output;
  std::vector<std::string> cfg_overrides;
  std::uint64_t seed = VerifyOptions{}.seed;
};

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw UsageError("invalid " + what + " '" + text + "'");
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  const double v = parse_number(text, what);
  if (v != std::floor(v) || std::abs(v) > 1e6) throw UsageError("invalid " + what + " '" + text + "'");
  return static_cast<int>(v);
}

QuadratureConfig parse_config(const std::vector<std::string>& overrides) {
  QuadratureConfig cfg;
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--cfg expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (key == "rel_tol") {
      cfg.rel_tol = parse_number(value, key);
    } else if (key == "abs_tol") {
      cfg.abs_tol = parse_number(value, key);
    } else if (key == "max_subdivisions") {
      const int n = parse_int(value, key);
      if (n <= 0) throw UsageError("max_subdivisions must be positive");
      cfg.max_subdivisions = static_cast<std::size_t>(n);
    } else if (key == "truncation_margin") {
      cfg.truncation_margin = parse_number(value, key);
    } else if (key == "substitution") {
      try {
        cfg.substitution = parse_substitution(value);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else {
      throw UsageError("unknown --cfg key '" + key + "'");
    }
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(cfg.truncation_margin > 0.0 && cfg.truncation_margin <= 1.0)) {
    throw UsageError("truncation_margin must lie in (0, 1]");
  }
  return cfg;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw UsageError("--s expects lo:hi:step, got '" + text + "'");
  const double lo = parse_number(text.substr(0, a), "s range");
  const double hi = parse_number(text.substr(a + 1, b - a - 1), "s range");
  const double step = parse_number(text.substr(b + 1), "s step");
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw UsageError("--s needs finite lo <= hi and step > 0");
  }
  if ((hi - lo) / step > 1e5) throw UsageError("--s grid has too many points");
  return uniform_grid(lo, hi, step);
}

double parse_bump(const std::string& text) {
  const std::string prefix = "bump:";
  if (text.rfind(prefix, 0) != 0) throw UsageError("--raw supports bump:<t0>, got '" + text + "'");
  const double t0 = parse_number(text.substr(prefix.size()), "bump radius");
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw UsageError("bump radius must be positive");
  return t0;
}

SpaceParams parse_space(const std::string& p, const std::string& q) {
  try {
    return make_space(parse_int(p, "p"), parse_int(q, "q"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Rational parse_lambda(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

nlohmann::ordered_json number_or_null(double x) {
  return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(format_double(x));
}

int cmd_classify(const std::string& p, const std::string& q, const std::string& lambda_max, const RunConfig& run,
                 std::ostream& out) {
  const auto space = parse_space(p, q);
  const Rational lmax = parse_lambda(lambda_max);
  if (lmax <= 0) throw UsageError("lambda_max must be positive");
  Report report;
  report.columns = {"p", "q", "lambda", "mu", "tag", "descends_to_projective"};
  report.meta["command"] = "classify";
  report.meta["p"] = space.p;
  report.meta["q"] = space.q;
  report.meta["lambda_max"] = to_string(lmax);
  const auto list = enumerate_discrete_series(space, lmax);
  int cuspidal = 0;
  for (const auto& ds : list) {
    report.add_row({space.p, space.q, to_string(ds.lambda), ds.mu, std::string(to_string(ds.tag)),
                    ds.descends_to_projective});
    cuspidal += ds.cuspidal() ? 1 : 0;
  }
  report.summary["parameters"] = list.size();
  report.summary["cuspidal"] = cuspidal;
  report.summary["non_cuspidal"] = static_cast<int>(list.size()) - cuspidal;
  write(render(report, parse_format(run.format)), run.output, out);
  return 0;
}

struct RadonArgs {
  std::string p, q, lambda, s_spec, raw, plot_path;
};

int cmd_radon(const RadonArgs& a, const RunConfig& run, std::ostream& out, std::ostream& err) {
  const auto space = parse_space(a.p, a.q);
  const QuadratureConfig cfg = parse_config(run.cfg_overrides);
  const auto format = parse_format(run.format);

  std::optional<GeneratingFunction> f;
  std::optional<Rational> lambda;
  if (!a.raw.empty()) {
    if (!a.lambda.empty()) throw UsageError("give either lambda or --raw, not both");
    f = make_bump(space, parse_bump(a.raw));
  } else {
    if (a.lambda.empty()) throw UsageError("lambda is required unless --raw is given");
    lambda = parse_lambda(a.lambda);
    try {
      f = make_generating_function(space, make_discrete_series(space, *lambda));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const auto grid = a.s_spec.empty() ? default_s_grid(space) : parse_grid(a.s_spec);

  const auto profile = make_profile(*f, grid, cfg);

  Report report;
  report.columns = {"p", "q", "lambda", "s", "value", "error_estimate", "converged", "evaluations"};
  report.meta["command"] = "radon";
  report.meta["p"] = space.p;
  report.meta["q"] = space.q;
  report.meta["lambda"] = lambda ? nlohmann::ordered_json(to_string(*lambda)) : nlohmann::ordered_json(nullptr);
  report.meta["function"] = f->provenance();
  report.meta["substitution"] = std::string(to_string(cfg.substitution));
  report.meta["rel_tol"] = cfg.rel_tol;
  report.meta["abs_tol"] = cfg.abs_tol;
  report.meta["max_subdivisions"] = cfg.max_subdivisions;
  report.meta["truncation_margin"] = cfg.truncation_margin;
  const nlohmann::ordered_json lambda_cell =
      lambda ? nlohmann::ordered_json(to_string(*lambda)) : nlohmann::ordered_json(nullptr);
  std::size_t failed = 0;
  for (const auto& s : profile.samples) {
    report.add_row({space.p, space.q, lambda_cell, s.s, s.value.real(), s.error_estimate, s.converged,
                    s.evaluations});
    if (!s.converged) ++failed;
  }

  auto& sum = report.summary;
  sum["verdict"] = std::string(to_string(profile.verdict));
  sum["failed_samples"] = failed;
  if (profile.fitted) {
    sum["C1"] = profile.C1;
    sum["C2"] = profile.C2;
    sum["residual"] = profile.residual;
  }
  if (profile.single) {
    sum["exponent"] = profile.single->exponent;
    sum["C"] = profile.single->C;
  }
  // Independent reference values for the leading coefficient where one exists.
  if (lambda && profile.verdict == Verdict::NonCuspidalNumeric) {
    try {
      if (profile.ds->exceptional()) {
        const double oracle = exceptional_limit_oracle(space, *profile.ds, cfg);
        sum["oracle"] = oracle;
        sum["oracle_rel_diff"] = std::abs(profile.C1 - oracle) / std::abs(oracle);
      } else if (f->k_invariant() && space.p < space.q) {
        const double limit = limit_at_plus_infinity(*f, cfg);
        sum["oracle"] = limit;
        sum["oracle_rel_diff"] = std::abs(profile.C1 - limit) / std::abs(limit);
      }
    } catch (const std::exception& e) {
      err << "warning: oracle unavailable: " << e.what() << '\n';
    }
  }
  write(render(report, format), run.output, out);

  if (!a.plot_path.empty()) {
    Report plot;
    plot.columns = {"s", "log_abs_Rf"};
    for (const auto& s : profile.samples) {
      const double v = std::abs(s.value);
      plot.add_row({s.s, number_or_null(v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity())});
    }
    write(to_csv(plot), a.plot_path, out);
  }
  if (failed > 0) err << failed << " sample(s) did not reach the requested tolerance\n";
  return failed > 0 ? 1 : 0;
}

int cmd_verify(const std::string& suite, const std::string& json_path, const RunConfig& run, std::ostream& out) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  VerifyOptions options;
  options.seed = run.seed;
  const auto checks = run_suite(suite, options);

  Report report;
  report.columns = {"criterion", "suite", "check", "measured", "tolerance", "passed"};
  report.meta["command"] = "verify";
  report.meta["suite"] = suite;
  report.meta["seed"] = run.seed;
  std::size_t failures = 0;
  for (const auto& c : checks) {
    report.add_row({c.criterion, c.suite, c.name, number_or_null(c.measured), number_or_null(c.tolerance), c.passed});
    if (!c.passed) ++failures;
  }
  report.summary["checks"] = checks.size();
  report.summary["failed"] = failures;
  report.summary["passed"] = failures == 0;
  write(render(report, parse_format(run.format)), run.output, out);
  if (!json_path.empty()) write(to_json(report), json_path, out);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radon transforms of discrete-series generating functions on X_{p,q}", "cuspidal-radon"};
  app.require_subcommand(1);
  RunConfig run;
  app.add_option("--format", run.format, "csv, json or human")
      ->check(CLI::IsMember({"csv", "json", "human"}))
      ->capture_default_str();
  app.add_option("-o,--output", run.output, "write the table here instead of stdout");

  std::string p, q, third;
  auto* classify = app.add_subcommand("classify", "list discrete-series parameters with their tags");
  classify->add_option("p", p)->required();
  classify->add_option("q", q)->required();
  classify->add_option("lambda_max", third)->required();

  RadonArgs ra;
  auto* radon = app.add_subcommand("radon", "sample Rf(s) and fit the exponential model");
  radon->add_option("p", ra.p)->required();
  radon->add_option("q", ra.q)->required();
  radon->add_option("lambda", ra.lambda);
  radon->add_option("--s", ra.s_spec, "grid lo:hi:step");
  radon->add_option("--raw", ra.raw, "evaluate a test function instead, bump:<t0>");
  radon->add_option("--cfg", run.cfg_overrides,
                    "quadrature override key=value (rel_tol, abs_tol, max_subdivisions, truncation_margin, "
                    "substitution)");
  radon->add_option("--emit-plot-data", ra.plot_path, "write s,log|Rf| as csv");

  std::string suite, json_path;
  auto* verify = app.add_subcommand("verify", "run an acceptance suite or all of them");
  verify->add_option("suite", suite)->required();
  verify->add_option("--json", json_path, "also write the report as json");
  verify->add_option("--seed", run.seed, "seed for randomized checks")->capture_default_str();

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*classify) return cmd_classify(p, q, third, run, out);
    if (*radon) return cmd_radon(ra, run, out, err);
    if (*verify) return cmd_verify(suite, json_path, run, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace cuspidal
