#include "earpack/graph.h"

#include <algorithm>
#include <deque>
#include <string>

namespace earpack {

VertexSet normalize(VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

EdgeSet normalize(EdgeSet edges) {
  for (Edge& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Graph::Graph(int order) {
  if (order < 0) throw GraphError("negative vertex count");
  adjacency_.resize(order);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (!is_vertex(e.u) || !is_vertex(e.v)) {
      throw GraphError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} has an endpoint outside 0.." +
                       std::to_string(order - 1));
    }
    if (e.u == e.v) {
      throw GraphError("loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < order; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      auto it = std::adjacent_find(list.begin(), list.end());
      throw GraphError("parallel edge {" + std::to_string(v) + "," +
                       std::to_string(*it) + "}");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!is_vertex(a) || !is_vertex(b)) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < order(); ++v) {
    for (Vertex w : adjacency_[v]) {
      if (v < w) out.push_back({v, w});
    }
  }
  return out;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kInfinity) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int vertex_distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.is_vertex(u) || !g.is_vertex(v)) {
    throw std::invalid_argument("vertex out of range");
  }
  return distances_from(g, u)[v];
}

int edge_distance(const Graph& g, Edge e, Edge f) {
  e = make_edge(e.u, e.v);
  f = make_edge(f.u, f.v);
  if (!g.has_edge(e.u, e.v) || !g.has_edge(f.u, f.v)) {
    throw std::invalid_argument("edge_distance: argument is not an edge");
  }
  if (e == f) {
    throw std::domain_error("edge_distance is only defined for distinct edges");
  }
  auto du = distances_from(g, e.u);
  auto dv = distances_from(g, e.v);
  return std::min({du[f.u], du[f.v], dv[f.u], dv[f.v]});
}

std::optional<int> is_regular(const Graph& g) {
  if (g.order() == 0) return 0;
  int r = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) {
    (color[v] == 0 ? parts.black : parts.white).push_back(v);
  }
  return parts;
}

namespace {

struct ShortestCycleSearch {
  int length = kInfinity;
  Vertex root = -1;
  Edge closing{};
};

ShortestCycleSearch find_shortest_cycle(const Graph& g) {
  ShortestCycleSearch best;
  std::vector<int> dist(g.order());
  std::vector<Vertex> parent(g.order());
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    std::fill(parent.begin(), parent.end(), -1);
    dist[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (2 * dist[v] + 1 >= best.length) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == kInfinity) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (len < best.length) {
            best.length = len;
            best.root = root;
            best.closing = {v, w};
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

int girth(const Graph& g) { return find_shortest_cycle(g).length; }

std::vector<Vertex> shortest_cycle(const Graph& g) {
  ShortestCycleSearch best = find_shortest_cycle(g);
  if (best.length == kInfinity) return {};
  // Rebuild both BFS branches from the minimizing root.
  std::vector<Vertex> parent(g.order(), -1);
  std::vector<bool> seen(g.order(), false);
  std::deque<Vertex> queue{best.root};
  seen[best.root] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> left, right;
  for (Vertex v = best.closing.u; v != -1; v = parent[v]) left.push_back(v);
  for (Vertex v = best.closing.v; v != -1; v = parent[v]) right.push_back(v);
  // Both branches end at the root; drop one copy.
  std::reverse(left.begin(), left.end());
  right.pop_back();
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

namespace {

class ChordlessCycleEnumerator {
 public:
  ChordlessCycleEnumerator(const Graph& g, int max_len, std::size_t cap)
      : g_(g),
        max_len_(max_len),
        cap_(cap),
        on_path_(g.order(), false),
        blocked_(g.order(), 0) {}

  CycleList run() {
    for (Vertex s = 0; s < g_.order() && !out_.truncated; ++s) {
      start_ = s;
      path_ = {s};
      on_path_[s] = true;
      extend();
      on_path_[s] = false;
    }
    return std::move(out_);
  }

 private:
  // path_ = s, v1, ..., vk is an induced path; blocked_[w] counts how many of
  // v1..v(k-1) are adjacent to w.
  void extend() {
    Vertex last = path_.back();
    for (Vertex w : g_.neighbors(last)) {
      if (out_.truncated) return;
      if (w <= start_ || on_path_[w] || blocked_[w] > 0) continue;
      bool closes = path_.size() >= 2 && g_.has_edge(w, start_);
      if (closes) {
        // Each cycle is met in both orientations; keep one.
        if (path_[1] < w) record(w);
        continue;
      }
      if (static_cast<int>(path_.size()) + 1 >= max_len_) continue;
      push(w);
      extend();
      pop();
    }
  }

  void push(Vertex w) {
    if (path_.size() >= 2) {
      for (Vertex x : g_.neighbors(path_.back())) ++blocked_[x];
    }
    path_.push_back(w);
    on_path_[w] = true;
  }

  void pop() {
    on_path_[path_.back()] = false;
    path_.pop_back();
    if (path_.size() >= 2) {
      for (Vertex x : g_.neighbors(path_.back())) --blocked_[x];
    }
  }

  void record(Vertex closing) {
    if (out_.cycles.size() >= cap_) {
      out_.truncated = true;
      return;
    }
    std::vector<Vertex> cycle = path_;
    cycle.push_back(closing);
    out_.cycles.push_back(std::move(cycle));
  }

  const Graph& g_;
  int max_len_;
  std::size_t cap_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
  std::vector<int> blocked_;
  CycleList out_;
};

}  // namespace

CycleList chordless_cycles(const Graph& g, int max_len, std::size_t cap) {
  if (max_len < 3) throw std::invalid_argument("max_len must be at least 3");
  CycleList list = ChordlessCycleEnumerator(g, max_len, cap).run();
  std::sort(list.cycles.begin(), list.cycles.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  list.odd.reserve(list.cycles.size());
  for (const auto& c : list.cycles) list.odd.push_back(c.size() % 2 == 1);
  return list;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  InducedSubgraph out;
  out.from_host.assign(g.order(), -1);
  for (Vertex v : vertices) {
    if (!g.is_vertex(v)) throw std::invalid_argument("vertex out of range");
    if (out.from_host[v] != -1) continue;
    out.from_host[v] = static_cast<Vertex>(out.to_host.size());
    out.to_host.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : out.to_host) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && out.from_host[w] != -1) {
        edges.push_back(make_edge(out.from_host[v], out.from_host[w]));
      }
    }
  }
  out.graph = Graph(static_cast<int>(out.to_host.size()), edges);
  return out;
}

EdgeSet boundary_edges(const Graph& g, const VertexSet& vertices) {
  std::vector<bool> inside(g.order(), false);
  for (Vertex v : vertices) inside[v] = true;
  EdgeSet out;
  for (Vertex v : vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (!inside[w]) out.push_back(make_edge(v, w));
    }
  }
  return normalize(std::move(out));
}

int internal_edge_count(const Graph& g, const VertexSet& vertices) {
  std::vector<bool> inside(g.order(), false);
  for (Vertex v : vertices) inside[v] = true;
  int twice = 0;
  for (Vertex v : vertices) {
    for (Vertex w : g.neighbors(v)) twice += inside[w] ? 1 : 0;
  }
  return twice / 2;
}

int edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  std::vector<bool> in_y(g.order(), false);
  for (Vertex v : y) in_y[v] = true;
  int count = 0;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) count += in_y[w] ? 1 : 0;
  }
  return count;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (label[root] != -1) continue;
    VertexSet comp{root};
    label[root] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (label[w] == -1) {
          label[w] = label[root];
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

VertexSet complement(int order, const VertexSet& vertices) {
  std::vector<bool> inside(order, false);
  for (Vertex v : vertices) inside[v] = true;
  VertexSet out;
  for (Vertex v = 0; v < order; ++v) {
    if (!inside[v]) out.push_back(v);
  }
  return out;
}

}  // namespace earpack
