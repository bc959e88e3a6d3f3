#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apal/axioms.hpp"
#include "apal/checker.hpp"
#include "apal/formula.hpp"
#include "apal/model.hpp"
#include "apal/rewrite.hpp"
#include "apal/selftest.hpp"

namespace py = pybind11;
using namespace apal;

namespace {

std::vector<std::string> world_names(const KripkeModel& m, WorldSet set) {
  std::vector<std::string> names;
  for (std::size_t w = 0; w < m.world_count(); ++w)
    if (set & (WorldSet{1} << w)) names.push_back(m.worlds()[w]);
  return names;
}

}  // namespace

PYBIND11_MODULE(_apal, m) {
  m.doc() = "Arbitrary public announcement logic toolkit";

  py::register_exception<ParseError>(m, "FormulaParseError");
  py::register_exception<ModelError>(m, "ModelError");

  py::class_<Formula>(m, "Formula")
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__",
           [](const Formula& f) { return "Formula('" + render(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__",
           [](const Formula& f) { return std::hash<Formula>{}(f); })
      .def_property_readonly("size", [](const Formula& f) { return size(f); })
      .def_property_readonly("box_depth",
                             [](const Formula& f) { return box_depth(f); })
      .def_property_readonly("is_epistemic",
                             [](const Formula& f) { return is_epistemic(f); })
      .def_property_readonly("is_box_free",
                             [](const Formula& f) { return is_box_free(f); });

  py::class_<KripkeModel>(m, "KripkeModel")
      .def_property_readonly("worlds", &KripkeModel::worlds)
      .def_property_readonly("agents", &KripkeModel::agents)
      .def("to_json", [](const KripkeModel& k) { return k.fingerprint(); })
      .def("__repr__", [](const KripkeModel& k) {
        return "KripkeModel(worlds=" + std::to_string(k.world_count()) + ")";
      });

  m.def("parse", &parse, py::arg("text"));
  m.def("render", &render, py::arg("formula"));
  m.def("load_model", &load_model, py::arg("json_text"));

  m.def(
      "precedes",
      [](const Formula& a, const Formula& b, const std::string& order) {
        if (order == "size") return less(a, b, Order::Size);
        if (order == "dbox") return less(a, b, Order::DBox);
        if (order == "size_dbox") return less(a, b, Order::SizeDBox);
        if (order == "subformula") return less(a, b, Order::StrictSubformula);
        throw std::invalid_argument("unknown order: " + order);
      },
      py::arg("a"), py::arg("b"), py::arg("order") = "size_dbox",
      "Strict induction orders: size, dbox, size_dbox, subformula.");

  m.def(
      "truth_set",
      [](const KripkeModel& k, const Formula& f) {
        return world_names(k, truth_set(k, f));
      },
      py::arg("model"), py::arg("formula"),
      "Worlds of the model satisfying the formula, in document order.");
  m.def("satisfies",
        [](const KripkeModel& k, const std::string& world, const Formula& f) {
          return satisfies(k, world, f);
        },
        py::arg("model"), py::arg("world"), py::arg("formula"));
  m.def("valid_on",
        [](const KripkeModel& k, const Formula& f) { return valid_on(k, f); },
        py::arg("model"), py::arg("formula"));
  m.def("box_oracle", &box_oracle, py::arg("model"), py::arg("world"),
        py::arg("inner"),
        "Brute-force subset semantics for box; small models only.");

  m.def(
      "bisim_classes",
      [](const KripkeModel& k) {
        Partition part = bisim_quotient(k);
        std::vector<std::vector<std::string>> classes;
        for (WorldSet block : part.blocks)
          classes.push_back(world_names(k, block));
        return classes;
      },
      py::arg("model"), "Bisimulation quotient as lists of world names.");

  m.def(
      "reduce",
      [](const Formula& f) {
        RewriteTrace trace = reduce_to_epistemic(f);
        std::vector<std::string> steps;
        for (const RewriteStep& step : trace.steps)
          steps.push_back(format_step(step));
        return py::make_tuple(trace.result, steps);
      },
      py::arg("formula"),
      "Reduce a box-free formula to an epistemic one; returns (result, "
      "step descriptions).");
  m.def("weight", [](const Formula& f) { return weight(f); },
        py::arg("formula"));

  m.def("match_axiom",
        [](const Formula& f) -> py::object {
          if (auto name = match_axiom(f)) return py::cast(*name);
          return py::none();
        },
        py::arg("formula"), "Name of the first matching axiom schema, if any.");

  m.def(
      "check_derivation",
      [](const std::string& text) {
        Verdict v = check_derivation(parse_derivation(text));
        return py::make_tuple(v.accepted, v.step, v.reason);
      },
      py::arg("text"),
      "Check a derivation document; returns (accepted, failing step, "
      "reason).");

  m.def(
      "selftest",
      [](std::uint64_t seed, std::uint64_t cases) {
        py::list out;
        for (const SuiteResult& r : run_all_suites(seed, cases)) {
          py::dict d;
          d["name"] = r.name;
          d["cases"] = r.cases;
          d["failures"] = r.failures;
          d["first_failure"] = r.first_failure;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 0, py::arg("cases") = 200,
      "Run the randomized property suites and report per-suite results.");
}
