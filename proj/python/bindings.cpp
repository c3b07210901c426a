#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sizecsp/classification.hpp"
#include "sizecsp/error.hpp"
#include "sizecsp/gadgets.hpp"
#include "sizecsp/io.hpp"
#include "sizecsp/solver.hpp"

namespace py = pybind11;
using namespace sizecsp;

namespace {

ValueSet to_set(const std::vector<int>& v) {
  ValueSet s;
  for (int x : v) s.insert(x);
  return s;
}

py::dict result_dict(const SolveResult& r) {
  py::dict d;
  d["found"] = r.found;
  d["assignment"] = r.found ? py::cast(r.assignment) : py::none();
  d["path"] = r.stats.path;
  d["nodes"] = r.stats.nodes;
  d["minimal_assignments"] = r.stats.minimal_assignments;
  return d;
}

py::object counterexample_obj(const std::optional<Counterexample>& c) {
  if (!c) return py::none();
  py::dict d;
  d["kind"] = c->kind_name();
  d["relation"] = c->relation->name();
  d["t1"] = c->t1;
  d["t2"] = c->t2;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Size- and cardinality-constrained CSP toolkit";

  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<HardLanguageError>(m, "HardLanguageError", PyExc_RuntimeError);

  py::class_<Language>(m, "Language")
      .def_property_readonly("domain", [](const Language& g) { return g.domain().values(); })
      .def_property_readonly("relation_names",
                             [](const Language& g) {
                               std::vector<std::string> names;
                               for (const auto& r : g.relations()) names.push_back(r->name());
                               return names;
                             })
      .def("relation", [](const Language& g, const std::string& name) {
        auto r = g.find(name);
        if (!r) throw py::key_error(name);
        return r->tuples();
      })
      .def("zero_valid", &Language::zero_valid)
      .def("is_cc0", [](const Language& g) { return is_cc0(g); })
      .def("__len__", &Language::size)
      .def("__str__", [](const Language& g) { return serialize_language(g); });

  py::class_<Instance>(m, "Instance")
      .def_readonly("num_vars", &Instance::num_vars)
      .def_readonly("k", &Instance::k)
      .def_property_readonly("num_constraints", [](const Instance& i) { return i.constraints.size(); })
      .def_property_readonly("card",
                             [](const Instance& i) -> py::object {
                               if (!i.pi) return py::none();
                               py::dict d;
                               for (Value v : i.domain.nonzero()) d[py::int_(v)] = i.pi->counts[v];
                               return d;
                             })
      .def("is_solution", [](const Instance& i, const Assignment& f) { return is_solution(i, f); })
      .def("__str__", [](const Instance& i) { return serialize_instance(i); });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, std::vector<std::pair<int, int>> edges, std::vector<std::pair<int, int>> arcs,
                       std::vector<std::vector<int>> groups) {
             Graph g{n, std::move(edges), std::move(arcs), std::move(groups)};
             g.validate();
             return g;
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{},
           py::arg("arcs") = std::vector<std::pair<int, int>>{}, py::arg("groups") = std::vector<std::vector<int>>{})
      .def_readonly("n", &Graph::n)
      .def_readonly("edges", &Graph::edges)
      .def_readonly("arcs", &Graph::arcs)
      .def_readonly("groups", &Graph::groups)
      .def("__str__", [](const Graph& g) { return serialize_graph(g); });

  m.def("parse_language", [](const std::string& text) { return parse_language(text); });
  m.def("parse_instance", [](const std::string& text, const Language& g) { return parse_instance(text, g); });
  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("cc0_normalize", &cc0_normalize);

  m.def("analyze", [](const Language& g) { return dump_analysis(g); }, "key: value analysis dump");
  m.def("value_type", [](const Language& g, int y) { return std::string(to_string(value_type(g, y))); });
  m.def("produces", &produces);
  m.def("core", [](const Language& g) { return core(g).values(); });
  m.def("is_weakly_separable", &is_weakly_separable);
  m.def(
      "find_counterexample",
      [](const Language& g, bool normalized) { return counterexample_obj(find_counterexample(g, normalized)); },
      py::arg("g"), py::arg("component_normalized") = false);
  m.def("is_closed", [](const Language& g, const std::vector<int>& d) { return is_closed(g, to_set(d)); });

  m.def("classify_ocsp", [](const Language& g) {
    const OcspReport r = classify_ocsp(cc0_normalize(g));
    py::dict d;
    d["verdict"] = to_string(r.verdict);
    if (r.witness) {
      d["d1"] = r.witness->d1.values();
      d["d2"] = r.witness->d2.values();
      d["counterexample"] = counterexample_obj(r.witness->counterexample);
    }
    return d;
  });
  m.def("classify_ccsp", [](const Language& g) {
    const CcspReport r = classify_ccsp(cc0_normalize(g));
    py::dict d;
    d["verdict"] = to_string(r.verdict);
    if (r.witness) {
      d["witness"] = r.witness->dprime.values();
      d["family"] = to_string(r.witness->family);
      d["counterexample"] = counterexample_obj(r.witness->counterexample);
    }
    return d;
  });

  m.def("solve_ocsp", [](const Instance& i, const Language& g) { return result_dict(solve_ocsp(i, g)); });
  m.def("solve_ccsp", [](const Instance& i, const Language& g) { return result_dict(solve_ccsp(i, g)); });
  m.def("brute_force", [](const Instance& i) { return result_dict(brute_force(i)); });
  m.def("ocsp_to_ccsp", &ocsp_to_ccsp);

  m.def("z_constant", [](int t, int delta, int i, int d) {
    return py::int_(py::str(z_constant(t, delta, i, d).str()));
  });
  m.def("encode_graph_problem",
        [](const std::string& kind, const Graph& graph, int t, int p, std::vector<int> parts, bool pc,
           bool cardinality) {
          auto k = graph_problem_from_string(kind);
          if (!k) throw py::value_error("unknown problem kind: " + kind);
          EncodeParams params{t, p, std::move(parts), !pc, cardinality};
          EncodedProblem e = encode_graph_problem(*k, graph, params);
          return py::make_tuple(e.language, e.instance);
        },
        py::arg("kind"), py::arg("graph"), py::arg("t"), py::arg("p") = 2, py::arg("part_sizes") = std::vector<int>{},
        py::arg("pc") = false, py::arg("cardinality") = false);
  m.def("clique_to_mimp", [](const Graph& g, int k) {
    MimpInstance mi = clique_to_mimp(g, k);
    return py::make_tuple(mi.graph, mi.t);
  });
}
