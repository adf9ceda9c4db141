#include "earpack/ears.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "earpack/flow.h"

namespace earpack {

EdgeSet Ear::edges() const {
  EdgeSet out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    out.push_back(make_edge(vertices[i], vertices[i + 1]));
  }
  if (kind == EarKind::kCycle && vertices.size() >= 2) {
    out.push_back(make_edge(vertices.back(), vertices.front()));
  }
  return normalize(std::move(out));
}

std::string_view outcome_name(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::kMaximum: return "maximum";
    case SearchOutcome::kTargetReached: return "target-reached";
    case SearchOutcome::kImpossible: return "impossible";
    case SearchOutcome::kUnknown: return "unknown";
  }
  return "unknown";
}

Verification validate_ear(const Graph& g, const VertexSet& u, const Ear& ear) {
  auto in_u = [&](Vertex v) { return std::binary_search(u.begin(), u.end(), v); };
  const auto& vs = ear.vertices;
  const std::size_t min_size = ear.kind == EarKind::kPath ? 2 : 3;
  if (vs.size() < min_size) return Verification::fail("too-short");
  for (Vertex v : vs) {
    if (!g.is_vertex(v)) return Verification::fail("vertex-out-of-range");
  }
  if (normalize(vs).size() != vs.size()) return Verification::fail("repeated-vertex");
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[i + 1])) return Verification::fail("not-adjacent");
  }
  if (ear.kind == EarKind::kPath) {
    if (!in_u(vs.front()) || !in_u(vs.back())) {
      return Verification::fail("endpoint-not-in-u");
    }
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      if (in_u(vs[i])) return Verification::fail("internal-vertex-in-u");
    }
  } else {
    if (!g.has_edge(vs.back(), vs.front())) return Verification::fail("not-adjacent");
    if (std::count_if(vs.begin(), vs.end(), in_u) != 1) {
      return Verification::fail("cycle-u-count");
    }
  }
  return Verification::pass();
}

Verification verify_packing(const Graph& g, const EarPacking& p) {
  if (normalize(p.u) != p.u) return Verification::fail("u-not-normalized");
  std::set<Edge> seen;
  for (const Ear& ear : p.ears) {
    Verification v = validate_ear(g, p.u, ear);
    if (!v) return v;
    if (!ear.odd()) return Verification::fail("even-ear");
    for (const Edge& e : ear.edges()) {
      if (!seen.insert(e).second) return Verification::fail("shared-edge");
    }
  }
  return Verification::pass();
}

namespace {

void check_u(const Graph& g, const VertexSet& u) {
  if (u.empty()) throw std::invalid_argument("ear packing needs a nonempty U");
  for (Vertex v : u) {
    if (!g.is_vertex(v)) throw std::invalid_argument("U contains a non-vertex");
  }
}

// Flow from U∩B to U∩W in a bipartite graph; every path is trimmed to a
// B-to-W stretch between consecutive U vertices.
std::vector<Ear> flow_ears(const Graph& g, const VertexSet& u_black,
                           const VertexSet& u_white, const VertexSet& u) {
  std::vector<Ear> ears;
  if (u_black.empty() || u_white.empty()) return ears;
  const int n = g.order();
  const int source = n, sink = n + 1;
  FlowNetwork net(n + 2);
  for (const Edge& e : g.edges()) net.add_edge(e.u, e.v, 1);
  for (Vertex b : u_black) net.add_arc(source, b, FlowNetwork::kUnbounded);
  for (Vertex w : u_white) net.add_arc(w, sink, FlowNetwork::kUnbounded);
  net.max_flow(source, sink);
  auto in = [](const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
  };
  for (const auto& nodes : net.decompose_paths(source, sink)) {
    std::vector<Vertex> path(nodes.begin() + 1, nodes.end() - 1);
    std::size_t start = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (!in(u, path[i])) continue;
      if (in(u_black, path[start]) && in(u_white, path[i])) {
        ears.push_back({EarKind::kPath,
                        std::vector<Vertex>(path.begin() + start, path.begin() + i + 1)});
        break;
      }
      start = i;
    }
  }
  return ears;
}

class PackingSearch {
 public:
  PackingSearch(const Graph& g, const VertexSet& u, std::optional<int> target,
                std::uint64_t max_nodes)
      : g_(g), in_u_(g.order(), false), edges_(g.edges()), adj_(g.order()),
        free_(edges_.size(), true), target_(target), max_nodes_(max_nodes) {
    for (Vertex v : u) in_u_[v] = true;
    for (std::size_t id = 0; id < edges_.size(); ++id) {
      adj_[edges_[id].u].push_back({edges_[id].v, static_cast<int>(id)});
      adj_[edges_[id].v].push_back({edges_[id].u, static_cast<int>(id)});
      stubs_ += anchors(static_cast<int>(id));
    }
    on_path_.assign(g.order(), false);
  }

  void run() {
    if (target_ && *target_ <= 0) {
      reached_ = true;
      return;
    }
    search();
  }

  const std::vector<Ear>& best() const { return best_; }
  bool reached() const { return reached_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Arc {
    Vertex to;
    int edge;
  };

  int anchors(int id) const {
    return (in_u_[edges_[id].u] ? 1 : 0) + (in_u_[edges_[id].v] ? 1 : 0);
  }

  void set_free(int id, bool value) {
    free_[id] = value;
    stubs_ += value ? anchors(id) : -anchors(id);
  }

  bool tick() {
    if (++nodes_ > max_nodes_) aborted_ = true;
    return !aborted_;
  }

  void record() {
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (target_ && static_cast<int>(best_.size()) >= *target_) reached_ = true;
    }
  }

  void take(const Ear& ear, const std::vector<int>& ids) {
    for (int id : ids) set_free(id, false);
    current_.push_back(ear);
    record();
  }

  void untake(const std::vector<int>& ids) {
    current_.pop_back();
    for (int id : ids) set_free(id, true);
  }

  void search() {
    if (reached_ || !tick()) return;
    if (current_.size() + stubs_ / 2 <= best_.size()) return;
    int e = -1;
    for (std::size_t id = 0; id < edges_.size(); ++id) {
      if (free_[id] && anchors(static_cast<int>(id)) > 0) {
        e = static_cast<int>(id);
        break;
      }
    }
    if (e < 0) return;
    const Edge edge = edges_[e];
    if (in_u_[edge.u] && in_u_[edge.v]) {
      // Used on its own is never worse than leaving it unused.
      take({EarKind::kPath, {edge.u, edge.v}}, {e});
      search();
      untake({e});
      return;
    }
    const Vertex anchor = in_u_[edge.u] ? edge.u : edge.v;
    const Vertex first = edge.other(anchor);
    std::vector<std::pair<Ear, std::vector<int>>> options;
    enumerate(anchor, first, e, options);
    if (aborted_) return;
    std::stable_sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.second.size() < b.second.size();
    });
    for (const auto& [ear, ids] : options) {
      take(ear, ids);
      search();
      untake(ids);
      if (reached_ || aborted_) return;
    }
    set_free(e, false);
    search();
    set_free(e, true);
  }

  // Every odd ear that starts with the edge anchor-first and uses only free
  // edges, in depth-first discovery order.
  void enumerate(Vertex anchor, Vertex first, int first_edge,
                 std::vector<std::pair<Ear, std::vector<int>>>& out) {
    std::vector<Vertex> path{anchor, first};
    std::vector<int> ids{first_edge};
    on_path_[anchor] = on_path_[first] = true;
    extend(anchor, path, ids, out);
    on_path_[anchor] = on_path_[first] = false;
  }

  void extend(Vertex anchor, std::vector<Vertex>& path, std::vector<int>& ids,
              std::vector<std::pair<Ear, std::vector<int>>>& out) {
    if (!tick()) return;
    const Vertex tip = path.back();
    for (const Arc& arc : adj_[tip]) {
      if (!free_[arc.edge] || arc.edge == ids.back()) continue;
      const bool odd_close = ids.size() % 2 == 0;  // closing edge makes it odd
      if (in_u_[arc.to]) {
        if (!odd_close) continue;
        if (arc.to == anchor) {
          ids.push_back(arc.edge);
          out.push_back({Ear{EarKind::kCycle, path}, ids});
          ids.pop_back();
        } else if (!on_path_[arc.to]) {
          path.push_back(arc.to);
          ids.push_back(arc.edge);
          out.push_back({Ear{EarKind::kPath, path}, ids});
          ids.pop_back();
          path.pop_back();
        }
        continue;
      }
      if (on_path_[arc.to]) continue;
      on_path_[arc.to] = true;
      path.push_back(arc.to);
      ids.push_back(arc.edge);
      extend(anchor, path, ids, out);
      ids.pop_back();
      path.pop_back();
      on_path_[arc.to] = false;
      if (aborted_) return;
    }
  }

  const Graph& g_;
  std::vector<bool> in_u_;
  EdgeSet edges_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<bool> free_;
  std::vector<bool> on_path_;
  int stubs_ = 0;
  std::optional<int> target_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool reached_ = false;
  std::vector<Ear> current_;
  std::vector<Ear> best_;
};

}  // namespace

PackingResult max_odd_ear_packing(const Graph& g, const VertexSet& u,
                                  std::optional<int> target, std::uint64_t max_nodes) {
  check_u(g, u);
  PackingResult result;
  result.packing.u = normalize(u);
  const VertexSet& uu = result.packing.u;
  if (auto parts = bipartition(g)) {
    VertexSet black, white;
    for (Vertex v : uu) {
      (std::binary_search(parts->black.begin(), parts->black.end(), v) ? black : white)
          .push_back(v);
    }
    result.packing.ears = flow_ears(g, black, white, uu);
    if (!target) {
      result.outcome = SearchOutcome::kMaximum;
    } else {
      result.outcome = result.packing.k() >= *target ? SearchOutcome::kTargetReached
                                                     : SearchOutcome::kImpossible;
    }
    return result;
  }
  PackingSearch search(g, uu, target, max_nodes);
  search.run();
  result.packing.ears = search.best();
  result.nodes = search.nodes();
  if (search.reached()) {
    result.outcome = SearchOutcome::kTargetReached;
  } else if (search.aborted()) {
    result.outcome = SearchOutcome::kUnknown;
  } else {
    result.outcome = target ? SearchOutcome::kImpossible : SearchOutcome::kMaximum;
  }
  return result;
}

EarPacking bipartite_ear_packing(const Graph& g, const Matching& m) {
  auto parts = bipartition(g);
  if (!parts) throw std::domain_error("bipartite_ear_packing needs a bipartite graph");
  require_matching_of(g, m);
  EarPacking packing;
  packing.u = m.covered();
  VertexSet black, white;
  for (Vertex v : packing.u) {
    (std::binary_search(parts->black.begin(), parts->black.end(), v) ? black : white)
        .push_back(v);
  }
  packing.ears = flow_ears(g, black, white, packing.u);
  return packing;
}

}  // namespace earpack
