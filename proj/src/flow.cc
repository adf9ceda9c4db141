#include "earpack/flow.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace earpack {

FlowNetwork::FlowNetwork(int nodes)
    : level_(nodes), cursor_(nodes), out_(nodes) {}

int FlowNetwork::add_arc(int from, int to, int capacity) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

int FlowNetwork::add_edge(int a, int b, int capacity) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({b, capacity, 0});
  arcs_.push_back({a, capacity, 0});
  out_[a].push_back(id);
  out_[b].push_back(id + 1);
  return id;
}

bool FlowNetwork::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  level_[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.capacity - a.flow > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

int FlowNetwork::push(int v, int sink, int limit) {
  if (v == sink) return limit;
  for (int& i = cursor_[v]; i < static_cast<int>(out_[v].size()); ++i) {
    int id = out_[v][i];
    Arc& a = arcs_[id];
    if (a.capacity - a.flow <= 0 || level_[a.to] != level_[v] + 1) continue;
    int pushed = push(a.to, sink, std::min(limit, a.capacity - a.flow));
    if (pushed > 0) {
      a.flow += pushed;
      arcs_[id ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  int total = 0;
  while (total < limit && build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (total < limit) {
      int pushed = push(source, sink, limit - total);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(int source) const {
  std::vector<bool> seen(node_count(), false);
  seen[source] = true;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.capacity - a.flow > 0 && !seen[a.to]) {
        seen[a.to] = true;
        queue.push_back(a.to);
      }
    }
  }
  return seen;
}

std::vector<std::vector<int>> FlowNetwork::decompose_paths(int source,
                                                           int sink) const {
  // Remaining positive flow per arc; undirected pairs carry +f / -f.
  std::vector<int> remaining(arcs_.size(), 0);
  for (std::size_t id = 0; id < arcs_.size(); ++id) {
    remaining[id] = std::max(0, arcs_[id].flow);
  }
  std::vector<std::size_t> next(node_count(), 0);
  std::vector<std::vector<int>> paths;
  std::vector<int> position(node_count(), -1);
  while (true) {
    std::vector<int> nodes{source};
    std::vector<int> used;
    position[source] = 0;
    int v = source;
    bool stuck = false;
    while (v != sink) {
      int chosen = -1;
      for (std::size_t& i = next[v]; i < out_[v].size(); ++i) {
        if (remaining[out_[v][i]] > 0) {
          chosen = out_[v][i];
          break;
        }
      }
      if (chosen < 0) {
        stuck = true;
        break;
      }
      int w = arcs_[chosen].to;
      if (position[w] >= 0) {
        // Cancel the circulation closed by this arc.
        int keep = position[w];
        --remaining[chosen];
        for (std::size_t j = keep; j < used.size(); ++j) --remaining[used[j]];
        for (std::size_t j = keep + 1; j < nodes.size(); ++j) {
          position[nodes[j]] = -1;
        }
        nodes.resize(keep + 1);
        used.resize(keep);
        v = w;
        continue;
      }
      used.push_back(chosen);
      position[w] = static_cast<int>(nodes.size());
      nodes.push_back(w);
      v = w;
    }
    for (int node : nodes) position[node] = -1;
    if (stuck) break;
    for (int id : used) --remaining[id];
    paths.push_back(std::move(nodes));
  }
  return paths;
}

namespace {

void check_terminals(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("terminal sets must be nonempty");
  }
  std::vector<bool> in_x(g.order(), false);
  for (Vertex v : x) {
    if (!g.is_vertex(v)) throw std::invalid_argument("vertex out of range");
    in_x[v] = true;
  }
  for (Vertex v : y) {
    if (!g.is_vertex(v)) throw std::invalid_argument("vertex out of range");
    if (in_x[v]) throw std::invalid_argument("terminal sets must be disjoint");
  }
}

}  // namespace

MinCut min_cut_between(const Graph& g, const VertexSet& x, const VertexSet& y,
                       int limit) {
  check_terminals(g, x, y);
  const int source = g.order();
  const int sink = g.order() + 1;
  FlowNetwork net(g.order() + 2);
  for (Vertex v : x) net.add_arc(source, v, FlowNetwork::kUnbounded);
  for (Vertex v : y) net.add_arc(v, sink, FlowNetwork::kUnbounded);
  for (const Edge& e : g.edges()) net.add_edge(e.u, e.v, 1);

  MinCut cut;
  cut.size = net.max_flow(source, sink, limit);
  if (cut.size >= limit) return cut;
  std::vector<bool> side = net.source_side(source);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (side[v]) cut.source_side.push_back(v);
  }
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) cut.edges.push_back(e);
  }
  return cut;
}

int edge_disjoint_paths(const Graph& g, const VertexSet& x,
                        const VertexSet& y) {
  return min_cut_between(g, x, y).size;
}

int vertex_disjoint_paths(const Graph& g, const VertexSet& x,
                          const VertexSet& y) {
  check_terminals(g, x, y);
  // v_in = 2v, v_out = 2v + 1.
  const int n = g.order();
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  for (Vertex v : x) net.add_arc(source, 2 * v, 1);
  for (Vertex v : y) net.add_arc(2 * v + 1, sink, 1);
  return net.max_flow(source, sink);
}

}  // namespace earpack
