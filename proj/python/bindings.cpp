// Python bindings for the group, graph and verification operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gg/catalog.hpp"
#include "gg/families.hpp"
#include "gg/graphs.hpp"
#include "gg/theorems.hpp"

namespace py = pybind11;
using namespace gg;

namespace {

CayleyGroup group_from_spec(const std::string& spec, std::optional<int> max_order) {
  ValidateOptions opts;
  if (max_order && *max_order > opts.order_cap) opts.order_cap = *max_order;
  return make_family(spec, opts);
}

BuildOptions build_opts(std::optional<int> max_order, int threads) {
  BuildOptions b;
  b.max_order = max_order;
  b.threads = threads;
  return b;
}

}  // namespace

PYBIND11_MODULE(_groupgraphs, m) {
  m.doc() = "Finite-group graph construction and theorem verification";

  // translators are tried newest-first, so register the base before the
  // derived exceptions
  py::register_exception<Error>(m, "GroupError", PyExc_RuntimeError);
  py::register_exception<OrderLimitExceeded>(m, "OrderLimitError", PyExc_RuntimeError);
  py::register_exception<NotAGroup>(m, "NotAGroupError", PyExc_ValueError);
  py::register_exception<BadParameter>(m, "BadParameterError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "SpecParseError", PyExc_ValueError);

  py::class_<CayleyGroup>(m, "Group")
      .def_property_readonly("order", &CayleyGroup::order)
      .def_property_readonly("name", &CayleyGroup::name)
      .def_property_readonly("identity", &CayleyGroup::identity)
      .def_property_readonly("labels", &CayleyGroup::labels)
      .def("mul", &CayleyGroup::mul, py::arg("x"), py::arg("y"))
      .def("inv", &CayleyGroup::inv, py::arg("x"))
      .def("conj", &CayleyGroup::conj, py::arg("g"), py::arg("x"))
      .def("commutator", &CayleyGroup::comm, py::arg("x"), py::arg("y"))
      .def("power", &CayleyGroup::pow, py::arg("x"), py::arg("k"))
      .def("elem_order", &CayleyGroup::elem_order, py::arg("x"))
      .def("label", &CayleyGroup::label, py::arg("x"))
      .def("generator",
           [](const CayleyGroup& g, const std::string& tag) { return g.generator(tag); },
           py::arg("tag"))
      .def("is_abelian", [](const CayleyGroup& g) { return is_abelian(g); })
      .def("is_nilpotent", [](const CayleyGroup& g) { return is_nilpotent(g); })
      .def("is_dedekind", [](const CayleyGroup& g) { return is_dedekind(g); })
      .def("is_eppo", &is_eppo)
      .def("is_simple", &is_simple)
      .def("is_2_generated", &is_2_generated)
      .def("has_cyclic_sylows", &has_cyclic_sylows)
      .def("exponent", [](const CayleyGroup& g) { return exponent(g); })
      .def("sylow",
           [](const CayleyGroup& g, int p) { return materialize(sylow_subgroup(g, p)).group; },
           py::arg("p"), "The Sylow p-subgroup as a standalone Group")
      .def("__repr__",
           [](const CayleyGroup& g) {
             return "<Group " + g.name() + " order " + std::to_string(g.order()) + ">";
           });

  py::class_<GroupGraph>(m, "Graph")
      .def_property_readonly("n", &GroupGraph::size)
      .def_property_readonly("kind", [](const GroupGraph& g) { return to_string(g.kind()); })
      .def_property_readonly("group_name", &GroupGraph::group_name)
      .def("adjacent", &GroupGraph::adjacent, py::arg("i"), py::arg("j"))
      .def("edge_count", &GroupGraph::edge_count)
      .def("edges", &GroupGraph::edges)
      .def("degree_sequence", &GroupGraph::degree_sequence)
      .def("connected_components", &GroupGraph::connected_components)
      .def("is_complete", &GroupGraph::complete)
      .def("to_dot", [](const GroupGraph& g) { return export_graph(g, ExportFormat::Dot); })
      .def("to_json", [](const GroupGraph& g) { return export_graph(g, ExportFormat::Json); })
      .def("__repr__", [](const GroupGraph& g) {
        return "<Graph " + to_string(g.kind()) + "(" + g.group_name() + ") edges=" +
               std::to_string(g.edge_count()) + ">";
      });

  py::class_<DirectedGroupGraph>(m, "DiGraph")
      .def_property_readonly("n", &DirectedGroupGraph::size)
      .def("arc", &DirectedGroupGraph::arc, py::arg("i"), py::arg("j"))
      .def("arc_count", &DirectedGroupGraph::arc_count)
      .def("arcs", &DirectedGroupGraph::arcs)
      .def("connected_components", &DirectedGroupGraph::connected_components)
      .def("to_dot",
           [](const DirectedGroupGraph& g) { return export_graph(g, ExportFormat::Dot); })
      .def("to_json",
           [](const DirectedGroupGraph& g) { return export_graph(g, ExportFormat::Json); });

  m.def("group", &group_from_spec, py::arg("spec"), py::arg("max_order") = py::none(),
        "Build a group from a spec string, e.g. 'Q8', 'SNNC(3,2,1)', 'x(Q8,C3)'");

  m.def(
      "build_graph",
      [](const CayleyGroup& g, const std::string& kind, std::optional<int> max_order,
         int threads) {
        const auto k = graph_kind_from_string(kind);
        if (!k) throw BadParameter("unknown graph kind '" + kind + "'");
        return build_graph(*k, g, build_opts(max_order, threads));
      },
      py::arg("group"), py::arg("kind"), py::arg("max_order") = py::none(),
      py::arg("threads") = 1);

  m.def(
      "directed_normalising",
      [](const CayleyGroup& g, std::optional<int> max_order, int threads) {
        return build_directed_normalising(g, build_opts(max_order, threads));
      },
      py::arg("group"), py::arg("max_order") = py::none(), py::arg("threads") = 1);

  m.def("graphs_equal", &graphs_equal, py::arg("a"), py::arg("b"));
  m.def("is_spanning_subgraph", &is_spanning_subgraph, py::arg("a"), py::arg("b"));

  m.def(
      "witness_pairs",
      [](const CayleyGroup& g) {
        std::vector<std::pair<int, int>> out;
        for (const auto& w : snorm_witness_pairs(g)) out.emplace_back(w.x, w.y);
        return out;
      },
      py::arg("group"), "Non-commuting pairs adjacent in SNorm(G)");

  m.def(
      "find_generating_adjacent_pair",
      [](const CayleyGroup& g) -> std::optional<std::pair<int, int>> {
        if (const auto w = find_generating_adjacent_pair(g)) return std::make_pair(w->x, w->y);
        return std::nullopt;
      },
      py::arg("group"));

  m.def(
      "has_snnc_subgroup",
      [](const CayleyGroup& g) -> std::optional<std::vector<int>> {
        if (const auto s = has_snnc_subgroup(g)) return s->elements();
        return std::nullopt;
      },
      py::arg("group"), "Member indices of an SNNC subgroup, or None");

  m.def("is_snnc", &is_snnc, py::arg("group"));
  m.def("is_type_b", &is_type_b, py::arg("group"));

  m.def(
      "classify_type_b",
      [](const CayleyGroup& g) -> py::object {
        const auto t = classify_type_b(g);
        if (!t) return py::none();
        py::dict d;
        d["p"] = t->p;
        d["alpha"] = t->alpha;
        d["beta"] = t->beta;
        d["rho"] = t->rho;
        d["sigma"] = t->sigma;
        d["case"] = t->case_tag;
        return d;
      },
      py::arg("group"));

  m.def("catalog", [] { return builtin_catalog_specs(); },
        "Spec strings of the built-in group catalog");

  m.def(
      "run_suite",
      [](std::optional<std::vector<std::string>> specs, std::vector<std::string> checks,
         int threads, std::optional<int> max_order) {
        std::vector<GroupSpec> parsed;
        if (specs) {
          for (const auto& s : *specs) parsed.push_back(parse_spec(s));
        } else {
          parsed = builtin_catalog();
        }
        SuiteOptions opts;
        opts.checks = std::move(checks);
        opts.threads = threads;
        opts.max_order = max_order;
        const auto report = run_suite(parsed, opts);
        py::module_ json = py::module_::import("json");
        return json.attr("loads")(report.to_json(false).dump());
      },
      py::arg("specs") = py::none(), py::arg("checks") = std::vector<std::string>{"all"},
      py::arg("threads") = 1, py::arg("max_order") = py::none(),
      "Run verification checks; returns the report as a dict");
}
