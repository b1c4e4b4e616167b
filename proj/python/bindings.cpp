#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eslab/equidist/claims.hpp"
#include "eslab/equidist/tbij.hpp"
#include "eslab/error.hpp"
#include "eslab/formulas/verify.hpp"
#include "eslab/report.hpp"

namespace py = pybind11;
using namespace eslab;

namespace {

// Reports cross the boundary as the CLI's JSON; the Python side parses them.
std::string verify(const std::string& id, const std::map<std::string, int>& caps, int points,
                   std::uint64_t seed, const std::map<std::string, std::string>& at,
                   const std::vector<int>& js, std::optional<int> n_max, int workers,
                   bool timing) {
  VerifyOptions o;
  o.caps = caps;
  o.sampling.count = points;
  o.sampling.seed = seed;
  for (const auto& [name, value] : at) o.sampling.pinned[name] = parse_rational(value);
  if (!js.empty()) o.js = js;
  o.n_max = n_max;
  o.workers = workers;
  VerifyReport r;
  {
    py::gil_scoped_release release;
    r = verify_formula(parse_formula(id), o);
  }
  return verify_json({r}, {timing});
}

std::map<std::string, std::string> distribution(int n, const std::string& stats,
                                                const std::string& domain) {
  Distribution d = joint_distribution(parse_stat_tuple(stats), n, parse_domain(domain));
  std::map<std::string, std::string> out;
  for (const auto& [key, count] : d.counts) out[key.to_string(d.stats)] = count.get_str();
  return out;
}

std::string check(const CheckReport& r, bool timing) { return check_json({r}, {{}}, {timing}); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks of permutation and inversion-sequence statistic identities";

  // Translators are tried newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BoundError>(m, "BoundError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);

  m.def("version", &tool_version);
  m.def("formulas", [] {
    std::vector<std::string> out;
    for (FormulaId id : all_formulas()) out.emplace_back(formula_name(id));
    return out;
  });
  m.def("claims", [] {
    std::vector<std::string> out;
    for (const auto& c : equidist_claims()) out.push_back(c.id);
    return out;
  });
  m.def("verify", &verify, py::arg("id"), py::arg("caps") = std::map<std::string, int>{},
        py::arg("points") = 3, py::arg("seed") = 1,
        py::arg("at") = std::map<std::string, std::string>{}, py::arg("js") = std::vector<int>{},
        py::arg("n_max") = std::nullopt, py::arg("workers") = 1, py::arg("timing") = true);
  m.def("distribution", &distribution, py::arg("n"), py::arg("stats"),
        py::arg("domain") = "perm", py::call_guard<py::gil_scoped_release>());
  m.def(
      "equidist",
      [](const std::string& id, int n_max, bool timing) {
        const auto& c = find_claim(id);
        return check(run_claim(c, n_max > 0 ? n_max : c.default_n_max), timing);
      },
      py::arg("claim"), py::arg("n_max") = 0, py::arg("timing") = true);
  m.def(
      "conjecture",
      [](int n_max, bool timing) { return check(check_conjecture_op2(n_max), timing); },
      py::arg("n_max") = kConjectureDefaultNMax, py::arg("timing") = true);
  m.def(
      "tbij_roundtrip",
      [](int n_max, bool timing) { return check(tbij_roundtrip_verify(n_max), timing); },
      py::arg("n_max"), py::arg("timing") = true);
  m.def(
      "baselines", [](int n_max, bool timing) { return check(check_baselines(n_max), timing); },
      py::arg("n_max") = 8, py::arg("timing") = true);
}
