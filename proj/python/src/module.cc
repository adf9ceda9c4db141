#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "earpack/connectivity.h"
#include "earpack/constructions.h"
#include "earpack/ears.h"
#include "earpack/graph.h"
#include "earpack/graph_io.h"
#include "earpack/harness.h"
#include "earpack/json_io.h"
#include "earpack/matching.h"
#include "earpack/named_graphs.h"

namespace py = pybind11;

namespace earpack {
namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string text(const Json& j) { return j.dump(); }

Matching to_matching(const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
  EdgeSet edges;
  for (const auto& [u, v] : pairs) edges.push_back(make_edge(u, v));
  Matching m(edges);
  require_matching_of(g, m);
  return m;
}

std::string analyze(const Graph& g) {
  const SearchBudget budget;
  Json j;
  j["n"] = g.order();
  j["edges"] = g.size();
  const auto degree = is_regular(g);
  j["r"] = degree ? Json(*degree) : Json(nullptr);
  j["girth"] = int_or_inf(girth(g));
  j["bipartite"] = bipartition(g).has_value();
  j["connected"] = is_connected(g);
  j["lambda_c"] = estimate_json(estimate_lambda_c(g, budget));
  j["lambda_oc"] = estimate_json(estimate_lambda_oc(g, budget));
  return text(j);
}

std::string lambda(const Graph& g, bool odd) {
  return text(connectivity_json(odd ? odd_cyclic_edge_connectivity(g) : cyclic_edge_connectivity(g)));
}

std::string ears(const Graph& g, const VertexSet& u, std::optional<int> target) {
  const PackingResult result = max_odd_ear_packing(g, normalize(u), target);
  Json j;
  j["outcome"] = std::string(outcome_name(result.outcome));
  j["exact"] = result.exact();
  j["k"] = result.packing.k();
  j["packing"] = packing_json(result.packing);
  return text(j);
}

std::string sweep(const std::vector<int>& degrees, int n_min, int n_max, int samples,
                  std::uint64_t seed, bool bipartite_only) {
  SweepParams params;
  params.degrees = degrees;
  params.n_min = n_min;
  params.n_max = n_max;
  params.samples = samples;
  params.seed = seed;
  params.bipartite_only = bipartite_only;
  return text(sweep_json(falsification_sweep(params)));
}

py::tuple construct(const std::string& family, int size, int r, std::uint64_t seed) {
  const auto f = family_from_name(family);
  if (!f) throw std::invalid_argument("unknown family: " + family);
  const ConstructionOutput out = build_family(*f, size, r, seed);
  Json sidecar = construction_sidecar_json(out);
  sidecar["report"] = expectations_json(verify_expectations(out));
  return py::make_tuple(out.graph, text(sidecar));
}

}  // namespace
}  // namespace earpack

PYBIND11_MODULE(_core, m) {
  using namespace earpack;
  m.attr("version") = std::string(kVersion);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int order, const std::vector<std::pair<int, int>>& pairs) {
             EdgeSet edges;
             for (const auto& [u, v] : pairs) edges.push_back(make_edge(u, v));
             return Graph(order, edges);
           }),
           py::arg("order"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (!g.is_vertex(v)) throw py::index_error("vertex out of range");
        const auto span = g.neighbors(v);
        return std::vector<Vertex>(span.begin(), span.end());
      })
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("to_graph6", [](const Graph& g) { return serialize_graph(g, GraphFormat::kGraph6); })
      .def_static("from_graph6",
                  [](const std::string& s) { return parse_graph(s, GraphFormat::kGraph6); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("named", [](const std::string& name) {
    auto g = named::by_name(name);
    if (!g) throw std::invalid_argument("unknown graph: " + name);
    return *g;
  });
  m.def("_analyze", &analyze);
  m.def("_lambda", &lambda, py::arg("g"), py::arg("odd") = false);
  m.def("_extend", [](const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
    return text(extension_json(extend_matching(g, to_matching(g, pairs))));
  });
  m.def("_check_theorem", [](const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
    return text(verdict_json(check_theorem(g, to_matching(g, pairs))));
  });
  m.def("_ears", &ears, py::arg("g"), py::arg("u"), py::arg("target") = std::nullopt);
  m.def("_sweep", &sweep);
  m.def("_construct", &construct);
}
