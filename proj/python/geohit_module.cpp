#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "geohit/cli.hpp"
#include "geohit/errors.hpp"
#include "geohit/hitting_set.hpp"
#include "geohit/instance.hpp"
#include "geohit/modular.hpp"
#include "geohit/reductions.hpp"
#include "geohit/separator_solver.hpp"
#include "geohit/separators.hpp"
#include "geohit/solvers.hpp"

namespace py = pybind11;
using namespace geohit;

namespace {

std::optional<Solution> solve_text(const std::string& text, const std::string& algo) {
  const SpiInstance inst = parse_instance(text);
  if (algo == "bruteforce") return solve_bruteforce(inst);
  if (algo == "hitting-bb") return solve_via_hitting_set(inst, HittingEngine::BranchAndBound);
  if (algo == "hitting-fdp") return solve_via_hitting_set(inst, HittingEngine::FamilyDp);
  if (algo == "tree") return solve_tree(inst);
  if (algo == "modular") return solve_modular(inst);
  throw Error("unknown algorithm '" + algo + "'");
}

py::dict verify_text(const std::string& text, const Solution& sol) {
  const auto r = verify_solution(parse_instance(text), sol);
  py::dict d;
  d["feasible"] = r.feasible();
  d["over_budget"] = r.over_budget;
  d["size"] = r.size;
  py::list violated;
  for (const auto& p : r.violated) violated.append(py::make_tuple(p.first, p.second));
  d["violated"] = violated;
  return d;
}

py::tuple generate_text(const std::string& gadget, const std::string& source, std::optional<int> k) {
  const auto kind = parse_gadget_kind(gadget);
  if (!kind) throw Error("unknown gadget '" + gadget + "'");
  if (*kind == GadgetKind::VcPairs || *kind == GadgetKind::VcComplete) {
    if (!k) throw Error("gadget " + gadget + " needs k");
    const auto src = parse_coloring_source(source).graph;
    const auto inst = *kind == GadgetKind::VcPairs ? gen_vc_pairs(src, *k) : gen_vc_complete(src, *k);
    return py::make_tuple(serialize_instance(inst), std::string("gadget ") + gadget + "\nshape none\n");
  }
  const auto a = is_coloring_gadget(*kind) ? generate_coloring_gadget(*kind, parse_coloring_source(source))
                                           : generate_hs_gadget(*kind, parse_hs_source(source));
  return py::make_tuple(serialize_instance(a.instance), serialize_certificate(a));
}

py::tuple run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"geohit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shortest-path interruption solvers";
  py::register_exception<Error>(m, "GeohitError", PyExc_ValueError);

  m.def("normalize_instance", [](const std::string& text) { return serialize_instance(parse_instance(text)); },
        py::arg("text"), "Parse .spi text and return its canonical form.");
  m.def("solve", &solve_text, py::arg("text"), py::arg("algo") = "hitting-bb",
        "Optimal solution as a sorted vertex list, or None when infeasible.");
  m.def("solve_with_separator",
        [](const std::string& text, const VertexSet& z, int p, int q) {
          return solve_with_separator(parse_instance(text), z, p, q);
        },
        py::arg("text"), py::arg("z"), py::arg("p"), py::arg("q"));
  m.def("verify", &verify_text, py::arg("text"), py::arg("solution"));
  m.def("generate", &generate_text, py::arg("gadget"), py::arg("source"), py::arg("k") = py::none(),
        "Returns (spi_text, certificate_text).");
  m.def("vertex_integrity",
        [](const std::string& text) {
          const auto vi = vertex_integrity(parse_instance(text).graph());
          return py::make_tuple(vi.iota, vi.witness.z);
        },
        py::arg("text"));
  m.def("run_cli", &run, py::arg("args"), "Run the command line front end; returns (exit_code, stdout, stderr).");
}
