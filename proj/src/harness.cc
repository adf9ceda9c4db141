#include "earpack/harness.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "earpack/generators.h"
#include "earpack/graph_io.h"
#include "earpack/json_io.h"
#include "earpack/random.h"

namespace earpack {

namespace {

int ceil_half(int x) { return (x + 1) / 2; }

bool has_cycle(const Graph& g) {
  const auto components = connected_components(g);
  return g.size() > g.order() - static_cast<int>(components.size());
}

std::vector<bool> membership(int order, const VertexSet& set) {
  std::vector<bool> in(order, false);
  for (Vertex v : set) in[v] = true;
  return in;
}

template <typename Search>
ConnectivityEstimate estimate(Search search) {
  ConnectivityEstimate out;
  try {
    out.value = search();
    out.upper_bound = out.value->value;
  } catch (const InexactError& e) {
    out.upper_bound = e.upper_bound();
  }
  return out;
}

// Smallest pairwise edge distance in M, kInfinity for fewer than two edges.
int matching_distance(const Graph& g, const Matching& m) {
  int best = kInfinity;
  const EdgeSet& edges = m.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      best = std::min(best, edge_distance(g, edges[i], edges[j]));
    }
  }
  return best;
}

// The ear as a closed or open walk of vertices.
std::vector<Vertex> walk_of(const Ear& ear) {
  std::vector<Vertex> walk = ear.vertices;
  if (ear.kind == EarKind::kCycle && !walk.empty()) walk.push_back(walk.front());
  return walk;
}

}  // namespace

bool ConnectivityEstimate::at_least(long long bound) const {
  return value && static_cast<long long>(value->value) >= bound;
}

ConnectivityEstimate estimate_lambda_c(const Graph& g, const SearchBudget& budget) {
  return estimate([&] { return cyclic_edge_connectivity(g, budget); });
}

ConnectivityEstimate estimate_lambda_oc(const Graph& g, const SearchBudget& budget) {
  return estimate([&] { return odd_cyclic_edge_connectivity(g, budget); });
}

GraphConnectivity measure_connectivity(const Graph& g, const SearchBudget& budget) {
  return {estimate_lambda_c(g, budget), estimate_lambda_oc(g, budget)};
}

long long HypothesisReport::ears_needed_i() const {
  return static_cast<long long>(m) * r - ceil_half(r) + 1;
}
long long HypothesisReport::ears_needed_ii() const {
  return static_cast<long long>(m) * r - r + 1;
}
long long HypothesisReport::lambda_c_needed() const {
  return static_cast<long long>(m) * r - m + theta;
}
long long HypothesisReport::lambda_oc_needed() const {
  return static_cast<long long>(2 * m - 1) * (r - 1);
}
bool HypothesisReport::side_condition() const { return m < r || !heavy_neighbor; }
bool HypothesisReport::hypothesis_met() const {
  return m >= 2 && r >= 3 && even_order && side_condition() && (case_i || case_ii);
}

bool recompute_case_i(const HypothesisReport& report) {
  return report.lambda_c.at_least(report.lambda_c_needed()) &&
         report.k_found >= report.ears_needed_i();
}

bool recompute_case_ii(const HypothesisReport& report) {
  return report.lambda_oc.at_least(report.lambda_oc_needed()) &&
         report.k_found >= report.ears_needed_ii();
}

namespace {

HypothesisReport basic_report(const Graph& g, const Matching& m, int min_edges) {
  const auto degree = is_regular(g);
  if (!degree) throw std::domain_error("graph is not regular");
  if (*degree < 3) throw std::domain_error("degree must be at least 3");
  if (m.size() < min_edges) {
    throw std::domain_error("matching must have at least " + std::to_string(min_edges) +
                            (min_edges == 1 ? " edge" : " edges"));
  }
  require_matching_of(g, m);

  HypothesisReport report;
  report.r = *degree;
  report.m = m.size();
  report.even_order = g.order() % 2 == 0;
  report.distance3 = is_distance_d_matching(g, m, 3);
  report.heavy_neighbor = heavy_neighbor_exists(g, m, report.r);
  report.theta = (report.m % 2 == 0 && report.r % 2 == 0) ? 1 : 0;
  return report;
}

}  // namespace

HypothesisReport evaluate_hypotheses(const Graph& g, const Matching& m,
                                     const HarnessBudget& budget,
                                     const GraphConnectivity* connectivity) {
  HypothesisReport report = basic_report(g, m, 2);
  const GraphConnectivity measured =
      connectivity ? *connectivity : measure_connectivity(g, budget.search);
  report.lambda_c = measured.lambda_c;
  report.lambda_oc = measured.lambda_oc;

  const bool lambda_i = report.lambda_c.at_least(report.lambda_c_needed());
  const bool lambda_ii = report.lambda_oc.at_least(report.lambda_oc_needed());

  auto search = [&](long long target, std::uint64_t nodes) {
    PackingResult result =
        max_odd_ear_packing(g, m.covered(), static_cast<int>(target), nodes);
    if (const auto check = verify_packing(g, result.packing); !check) {
      throw std::logic_error("ear search returned an invalid packing: " + check.reason);
    }
    report.k_outcome = result.outcome;
    report.k_exact = result.exact();
    if (!report.packing || result.packing.k() > report.k_found) {
      report.k_found = result.packing.k();
      report.packing = std::move(result.packing);
    }
  };

  if (lambda_i) search(report.ears_needed_i(), budget.search.max_ear_nodes);
  if (lambda_ii && report.k_found < report.ears_needed_ii()) {
    search(report.ears_needed_ii(), budget.search.max_ear_nodes);
  }
  if (!lambda_i && !lambda_ii) search(report.ears_needed_i(), budget.report_ear_nodes);

  report.case_i = recompute_case_i(report);
  report.case_ii = recompute_case_ii(report);
  return report;
}

TheoremVerdict check_theorem(const Graph& g, const Matching& m, const HarnessBudget& budget,
                             const GraphConnectivity* connectivity) {
  TheoremVerdict verdict;
  verdict.report = m.size() == 1 ? basic_report(g, m, 1)
                                 : evaluate_hypotheses(g, m, budget, connectivity);
  verdict.hypothesis_met = verdict.report.hypothesis_met();
  verdict.extension = extend_matching(g, m);
  verdict.consistent = !verdict.hypothesis_met || verdict.extension.extended();
  return verdict;
}

Lemma10Result lemma10_check(const Graph& g, const VertexSet& t_in, const VertexSet& l_in,
                            int d) {
  const auto degree = is_regular(g);
  if (!degree) throw std::domain_error("not regular");
  if (!is_connected(g)) throw std::domain_error("not connected");
  const int r = *degree;
  if (static_cast<long long>(r - 2) * (d - 2) < 4) {
    throw std::domain_error("(r-2)(d-2) < 4");
  }
  const VertexSet t = normalize(t_in);
  const VertexSet l = normalize(l_in);
  for (Vertex v : t) {
    if (!g.is_vertex(v)) throw std::domain_error("T is not an induced tree");
  }
  if (t.empty() || internal_edge_count(g, t) != static_cast<int>(t.size()) - 1 ||
      !is_connected(induced_subgraph(g, t).graph)) {
    throw std::domain_error("T is not an induced tree");
  }
  if (!std::includes(t.begin(), t.end(), l.begin(), l.end())) {
    throw std::domain_error("L is not a subset of T");
  }
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto dist = distances_from(g, l[i]);
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (dist[l[j]] < d) throw std::domain_error("L is not a distance-d set");
    }
  }
  Lemma10Result out;
  out.lhs = static_cast<long long>(boundary_edges(g, t).size());
  out.rhs = static_cast<long long>(r) * static_cast<long long>(l.size());
  out.holds = out.lhs >= out.rhs;
  return out;
}

bool ClaimReport::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ClaimRow& row) { return !row.asserted || row.holds; });
}

ClaimReport claim_invariants(const Graph& g, const Matching& m, const BarrierCertificate& cert,
                             bool hypotheses_met, const std::optional<EarPacking>& packing) {
  const auto degree = is_regular(g);
  if (!degree) throw std::domain_error("graph is not regular");
  const int r = *degree;

  ClaimReport report;
  report.hypotheses_met = hypotheses_met;
  auto add = [&](std::string name, int component, long long lhs, long long rhs, bool holds,
                 bool asserted) {
    report.rows.push_back({std::move(name), component, lhs, rhs, holds, asserted});
  };

  const Eq1Sides eq1 = eq1_sides(g, m, cert.s);
  add("eq1", -1, eq1.lhs, eq1.rhs, eq1.lhs == eq1.rhs, true);

  const int count = static_cast<int>(cert.all_components.size());
  std::vector<long long> boundary(count);
  std::vector<bool> bipartite(count);
  for (int i = 0; i < count; ++i) {
    const VertexSet& d = cert.all_components[i];
    boundary[i] = static_cast<long long>(boundary_edges(g, d).size());
    bipartite[i] = bipartition(induced_subgraph(g, d).graph).has_value();
    if (d.size() % 2 == 1) {
      add("odd-boundary", i, boundary[i], r, boundary[i] >= r, hypotheses_met);
    }
    if (internal_edge_count(g, d) >= static_cast<int>(d.size())) {
      const bool outside = has_cycle(induced_subgraph(g, complement(g.order(), d)).graph);
      add("cycle-outside", i, outside ? 1 : 0, 1, outside, hypotheses_met);
    }
  }
  add("non-bipartite-odd", -1, cert.q2, 1, cert.q2 <= 1, hypotheses_met);

  if (!packing) return report;
  if (packing->u != m.covered()) {
    throw std::invalid_argument("packing is not a packing of V(M)");
  }
  if (const auto check = verify_packing(g, *packing); !check) {
    throw std::invalid_argument("invalid packing: " + check.reason);
  }

  const auto in_m = membership(g.order(), m.covered());
  const auto in_s = membership(g.order(), cert.s);
  auto in_t = [&](Vertex v) { return !in_m[v] && !in_s[v]; };
  auto excluded = [&](Vertex a, Vertex b) {
    return (in_m[a] || in_s[a]) && (in_m[b] || in_s[b]);
  };

  EdgeSet f;
  for (const Ear& ear : packing->ears) {
    const std::vector<Vertex> walk = walk_of(ear);
    bool avoids = true;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      if (excluded(walk[i], walk[i + 1])) avoids = false;
    }
    if (!avoids) continue;
    std::optional<Edge> chosen;
    for (std::size_t i = 0; i < walk.size() && !chosen;) {
      if (!in_t(walk[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < walk.size() && in_t(walk[j + 1])) ++j;
      if ((j - i) % 2 == 1) chosen = make_edge(walk[i], walk[i + 1]);
      i = j + 1;
    }
    if (!chosen) throw std::logic_error("odd ear without an odd T-segment");
    f.push_back(*chosen);
  }
  report.f_size = static_cast<int>(f.size());

  const long long k = packing->k();
  const long long floor_f = k - m.size() - cert.m_star - cert.mu;
  add("f-count", -1, report.f_size, floor_f, report.f_size >= floor_f, true);

  for (int i = 0; i < count; ++i) {
    const VertexSet& d = cert.all_components[i];
    const auto in_d = membership(g.order(), d);
    const long long inside = std::count_if(
        f.begin(), f.end(), [&](const Edge& e) { return in_d[e.u] && in_d[e.v]; });
    const bool odd_bipartite = bipartite[i] && d.size() % 2 == 1;
    const long long rhs = 2 * inside + (odd_bipartite ? r : 0);
    add("f-boundary", i, boundary[i], rhs, boundary[i] >= rhs, true);
  }
  const long long t_rhs = 2LL * report.f_size + static_cast<long long>(cert.q1) * r;
  add("t-boundary", -1, eq1.lhs, t_rhs, eq1.lhs >= t_rhs, true);
  return report;
}

std::vector<Matching> distance3_matchings(const Graph& g, int min_size, int cap,
                                          std::uint64_t seed) {
  std::vector<Matching> out;
  if (cap <= 0) return out;
  EdgeSet edges = g.edges();
  Rng rng(seed);
  rng.shuffle(edges);
  const int count = static_cast<int>(edges.size());

  std::vector<std::vector<int>> dist(g.order());
  for (Vertex v = 0; v < g.order(); ++v) dist[v] = distances_from(g, v);
  auto far = [&](const Edge& a, const Edge& b) {
    return std::min({dist[a.u][b.u], dist[a.u][b.v], dist[a.v][b.u], dist[a.v][b.v]}) >= 3;
  };

  EdgeSet chosen;
  auto dfs = [&](auto&& self, int start) -> void {
    for (int i = start; i < count && static_cast<int>(out.size()) < cap; ++i) {
      const Edge& e = edges[i];
      if (!std::all_of(chosen.begin(), chosen.end(),
                       [&](const Edge& c) { return far(c, e); })) {
        continue;
      }
      chosen.push_back(e);
      if (static_cast<int>(chosen.size()) >= min_size) out.emplace_back(chosen);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

SweepSummary falsification_sweep(const SweepParams& params) {
  SweepSummary summary;
  std::vector<std::pair<int, int>> shapes;  // (n, r)
  for (int r : params.degrees) {
    for (int n = std::max(params.n_min, r + 1); n <= params.n_max; ++n) {
      if (n % 2 == 0 && r >= 3 && (!params.bipartite_only || n >= 2 * r)) {
        shapes.emplace_back(n, r);
      }
    }
  }
  if (params.samples <= 0 || shapes.empty()) return summary;

  for (int sample = 0; sample < params.samples; ++sample) {
    ++summary.samples;
    const std::uint64_t sample_seed = derive_seed(params.seed, sample);
    Rng pick(sample_seed);
    const auto [n, r] = shapes[pick.below(shapes.size())];
    const std::uint64_t graph_seed = derive_seed(sample_seed, 1);
    Graph g;
    try {
      g = params.bipartite_only ? random_bipartite_regular(n / 2, r, graph_seed)
                                : random_regular(n, r, graph_seed);
    } catch (const GenerationError& e) {
      summary.errors.push_back("sample " + std::to_string(sample) + ": " + e.what());
      continue;
    }

    const GraphConnectivity connectivity = measure_connectivity(g, params.budget.search);
    const auto matchings =
        distance3_matchings(g, 2, params.matching_cap, derive_seed(sample_seed, 2));
    if (static_cast<int>(matchings.size()) >= params.matching_cap) ++summary.capped_graphs;

    for (std::size_t index = 0; index < matchings.size(); ++index) {
      const Matching& m = matchings[index];
      const TheoremVerdict verdict = check_theorem(g, m, params.budget, &connectivity);
      ++summary.matchings;
      if (verdict.hypothesis_met) ++summary.hypothesis_met;
      if (verdict.report.case_i) ++summary.case_i;
      if (verdict.report.case_ii) ++summary.case_ii;
      if (verdict.consistent) {
        ++summary.consistent;
        continue;
      }
      ++summary.inconsistent;
      Json bundle;
      bundle["schema"] = kSchemaVersion;
      bundle["version"] = kVersion;
      bundle["sweep_seed"] = params.seed;
      bundle["sample"] = sample;
      bundle["graph_seed"] = graph_seed;
      bundle["bipartite_only"] = params.bipartite_only;
      bundle["n"] = n;
      bundle["r"] = r;
      bundle["graph6"] = serialize_graph(g, GraphFormat::kGraph6);
      bundle["matching"] = matching_json(m);
      bundle["verdict"] = verdict_json(verdict);
      const std::string name =
          "bundle-" + std::to_string(sample) + "-" + std::to_string(index) + ".json";
      if (params.bundle_dir.empty()) {
        summary.bundles.push_back(name);
      } else {
        const std::filesystem::path dir(params.bundle_dir);
        std::filesystem::create_directories(dir);
        const std::filesystem::path path = dir / name;
        std::ofstream(path) << dump_json(bundle);
        summary.bundles.push_back(path.string());
      }
    }

    if (params.include_single_edges) {
      for (const Edge& e : g.edges()) {
        const TheoremVerdict verdict = check_theorem(g, Matching(EdgeSet{e}), params.budget);
        ++summary.single_edges;
        if (!verdict.extension.extended()) ++summary.single_edges_blocked;
      }
    }

    if (bipartition(g) && connectivity.lambda_c.known()) {
      std::vector<Matching> candidates = matchings;
      for (const Edge& e : g.edges()) candidates.emplace_back(EdgeSet{e});
      const long long lambda = connectivity.lambda_c.value->value;
      for (const Matching& m : candidates) {
        const int d = matching_distance(g, m);
        if (d < 3 || (r == 3 && d <= 4)) continue;
        const long long bound = std::min(lambda, static_cast<long long>(m.size()) * r);
        ++summary.lemma3_checked;
        if (bipartite_ear_packing(g, m).k() < bound) ++summary.lemma3_violations;
      }
    }
  }
  return summary;
}

}  // namespace earpack
