#include "cuspidal/analysis.hpp"
#include "cuspidal/genfun.hpp"
#include "cuspidal/params.hpp"
#include "cuspidal/radon.hpp"
#include "cuspidal/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace cuspidal;

namespace {

QuadratureConfig make_config(double rel_tol, double abs_tol, std::size_t max_subdivisions,
                             const std::string& substitution) {
  QuadratureConfig cfg;
  cfg.rel_tol = rel_tol;
  cfg.abs_tol = abs_tol;
  cfg.max_subdivisions = max_subdivisions;
  cfg.substitution = parse_substitution(substitution);
  cfg.validate();
  return cfg;
}

// Rationals cross the boundary as "num/den" strings, matching the CLI.
GeneratingFunction function_for(int p, int q, const std::string& lambda, std::optional<double> bump) {
  const auto space = make_space(p, q);
  if (bump) return make_bump(space, *bump);
  return make_generating_function(space, make_discrete_series(space, parse_rational(lambda)));
}

py::dict sample_dict(const RadonSample& r) {
  py::dict d;
  d["s"] = r.s;
  d["value"] = r.value;
  d["error_estimate"] = r.error_estimate;
  d["evaluations"] = r.evaluations;
  d["converged"] = r.converged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Radon transforms of discrete-series generating functions on X_{p,q}";

  py::register_exception<QuadratureFailure>(m, "QuadratureFailure", PyExc_RuntimeError);
  py::register_exception<DecayViolation>(m, "DecayViolation", PyExc_ValueError);

  m.def(
      "space",
      [](int p, int q) {
        const auto s = make_space(p, q);
        py::dict d;
        d["p"] = s.p;
        d["q"] = s.q;
        d["rho"] = to_string(s.rho);
        d["rho_c"] = to_string(s.rho_c);
        d["rho1"] = to_string(s.rho1);
        d["alpha"] = s.alpha;
        d["beta"] = s.beta;
        d["case"] = s.case_tag == SpaceCase::A ? "A" : "B";
        d["degenerate_x"] = s.degenerate_x;
        return d;
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "classify",
      [](int p, int q, const std::string& lambda_max) {
        const auto space = make_space(p, q);
        py::list rows;
        for (const auto& ds : enumerate_discrete_series(space, parse_rational(lambda_max))) {
          py::dict d;
          d["lambda"] = to_string(ds.lambda);
          d["mu"] = ds.mu;
          d["tag"] = std::string(to_string(ds.tag));
          d["descends_to_projective"] = ds.descends_to_projective;
          rows.append(d);
        }
        return rows;
      },
      py::arg("p"), py::arg("q"), py::arg("lambda_max"));

  m.def(
      "radon",
      [](int p, int q, const std::string& lambda, std::vector<double> s, std::optional<double> bump, double rel_tol,
         double abs_tol, std::size_t max_subdivisions, const std::string& substitution) {
        const auto f = function_for(p, q, lambda, bump);
        const auto cfg = make_config(rel_tol, abs_tol, max_subdivisions, substitution);
        std::vector<RadonSample> samples;
        {
          py::gil_scoped_release release;
          samples = radon_profile(f, s, cfg);
        }
        py::list out;
        for (const auto& r : samples) out.append(sample_dict(r));
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("lambda") = "", py::arg("s") = std::vector<double>{0.0},
      py::arg("bump") = py::none(), py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-13,
      py::arg("max_subdivisions") = 4000, py::arg("substitution") = "auto");

  m.def(
      "profile",
      [](int p, int q, const std::string& lambda, std::optional<std::vector<double>> s, double rel_tol) {
        const auto f = function_for(p, q, lambda, std::nullopt);
        QuadratureConfig cfg;
        cfg.rel_tol = rel_tol;
        cfg.validate();
        RadonProfile prof;
        {
          py::gil_scoped_release release;
          prof = make_profile(f, s ? *s : default_s_grid(f.space()), cfg);
        }
        py::dict d;
        d["verdict"] = std::string(to_string(prof.verdict));
        d["C1"] = prof.C1;
        d["C2"] = prof.C2;
        d["residual"] = prof.residual;
        d["exponent"] = prof.single ? py::cast(prof.single->exponent) : py::none();
        py::list rows;
        for (const auto& r : prof.samples) rows.append(sample_dict(r));
        d["samples"] = rows;
        return d;
      },
      py::arg("p"), py::arg("q"), py::arg("lambda"), py::arg("s") = py::none(), py::arg("rel_tol") = 1e-10);

  m.def("suite_names", &suite_names);

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) {
        VerifyOptions options;
        options.seed = seed;
        std::vector<Check> checks;
        {
          py::gil_scoped_release release;
          checks = run_suite(suite, options);
        }
        py::list out;
        for (const auto& c : checks) {
          py::dict d;
          d["criterion"] = c.criterion;
          d["suite"] = c.suite;
          d["name"] = c.name;
          d["measured"] = c.measured;
          d["tolerance"] = c.tolerance;
          d["passed"] = c.passed;
          out.append(d);
        }
        return out;
      },
      py::arg("suite"), py::arg("seed") = VerifyOptions{}.seed);
}
