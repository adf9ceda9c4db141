#include "earpack/matching.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace earpack {

Matching::Matching(EdgeSet edges) : edges_(normalize(std::move(edges))) {
  for (const Edge& e : edges_) {
    covered_.push_back(e.u);
    covered_.push_back(e.v);
  }
  std::sort(covered_.begin(), covered_.end());
  if (std::adjacent_find(covered_.begin(), covered_.end()) != covered_.end()) {
    throw std::invalid_argument("edges of a matching must be vertex-disjoint");
  }
}

bool Matching::covers(Vertex v) const {
  return std::binary_search(covered_.begin(), covered_.end(), v);
}

void require_matching_of(const Graph& g, const Matching& m) {
  for (const Edge& e : m.edges()) {
    if (!g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("matching edge {" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) +
                                  "} is not an edge of the graph");
    }
  }
}

namespace {

// Edmonds' blossom search over a mate array. The same search, seeded from
// every exposed vertex at once, yields the Gallai-Edmonds set D.
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g)
      : g_(g),
        mate_(g.order(), -1),
        parent_(g.order(), -1),
        base_(g.order()),
        even_(g.order(), false),
        in_blossom_(g.order(), false),
        is_root_(g.order(), false) {}

  void augment_all() {
    for (Vertex root = 0; root < g_.order(); ++root) {
      if (mate_[root] != -1) continue;
      Vertex end = search({root});
      if (end == -1) continue;
      // Flip the alternating path ending at `end`.
      for (Vertex v = end; v != -1;) {
        Vertex pv = parent_[v];
        Vertex next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
  }

  // Even vertices of the alternating forest grown from all exposed vertices.
  // Only meaningful once the matching is maximum.
  std::vector<bool> even_after_full_search() {
    std::vector<Vertex> roots;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (mate_[v] == -1) roots.push_back(v);
    }
    if (roots.empty()) return std::vector<bool>(g_.order(), false);
    if (search(roots) != -1) {
      throw std::logic_error("augmenting path left after maximum matching");
    }
    return even_;
  }

  Matching matching() const {
    EdgeSet edges;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (mate_[v] > v) edges.push_back({v, mate_[v]});
    }
    return Matching(std::move(edges));
  }

 private:
  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<bool> seen(g_.order(), false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Returns an exposed non-root vertex reached by an augmenting path, or -1.
  Vertex search(const std::vector<Vertex>& roots) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(even_.begin(), even_.end(), false);
    std::fill(is_root_.begin(), is_root_.end(), false);
    for (Vertex v = 0; v < g_.order(); ++v) base_[v] = v;
    std::deque<Vertex> queue;
    for (Vertex r : roots) {
      even_[r] = true;
      is_root_[r] = true;
      queue.push_back(r);
    }
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (is_root_[to] || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          Vertex b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < g_.order(); ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!even_[i]) {
              even_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          even_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> even_;
  std::vector<bool> in_blossom_;
  std::vector<bool> is_root_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  BlossomSearch search(g);
  search.augment_all();
  return search.matching();
}

GallaiEdmonds gallai_edmonds(const Graph& g) {
  BlossomSearch search(g);
  search.augment_all();
  std::vector<bool> in_d = search.even_after_full_search();
  GallaiEdmonds out;
  out.matching = search.matching();
  std::vector<bool> in_a(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_d[v]) continue;
    for (Vertex w : g.neighbors(v)) {
      if (!in_d[w]) in_a[w] = true;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_d[v]) {
      out.d.push_back(v);
    } else if (in_a[v]) {
      out.a.push_back(v);
    } else {
      out.c.push_back(v);
    }
  }
  return out;
}

BarrierCertificate make_barrier_certificate(const Graph& g, const Matching& m,
                                            const VertexSet& s) {
  BarrierCertificate cert;
  cert.s = normalize(s);
  for (Vertex v : cert.s) {
    if (!g.is_vertex(v)) throw std::invalid_argument("S: vertex out of range");
    if (m.covers(v)) throw std::invalid_argument("S must avoid V(M)");
  }
  VertexSet removed = m.covered();
  removed.insert(removed.end(), cert.s.begin(), cert.s.end());
  VertexSet t = complement(g.order(), normalize(std::move(removed)));
  InducedSubgraph sub = induced_subgraph(g, t);
  for (const VertexSet& local : connected_components(sub.graph)) {
    VertexSet host;
    for (Vertex v : local) host.push_back(sub.to_host[v]);
    host = normalize(std::move(host));
    if (host.size() % 2 == 1) {
      InducedSubgraph comp = induced_subgraph(g, host);
      (bipartition(comp.graph) ? cert.q1 : cert.q2) += 1;
      cert.odd_components.push_back(host);
    }
    cert.all_components.push_back(std::move(host));
  }
  cert.m_star = internal_edge_count(g, m.covered()) - m.size();
  cert.mu = internal_edge_count(g, cert.s) + edges_between(g, cert.s, m.covered());
  return cert;
}

Verification verify_barrier(const Graph& g, const Matching& m,
                            const BarrierCertificate& cert) {
  for (const Edge& e : m.edges()) {
    if (!g.has_edge(e.u, e.v)) return Verification::fail("matching-not-in-graph");
  }
  if (normalize(cert.s) != cert.s) return Verification::fail("s-not-normalized");
  for (Vertex v : cert.s) {
    if (!g.is_vertex(v)) return Verification::fail("s-out-of-range");
    if (m.covers(v)) return Verification::fail("s-meets-matching");
  }
  BarrierCertificate expected = make_barrier_certificate(g, m, cert.s);
  if (cert.all_components != expected.all_components) {
    return Verification::fail("components-mismatch");
  }
  if (cert.odd_components != expected.odd_components) {
    return Verification::fail("odd-components-mismatch");
  }
  if (cert.q1 != expected.q1 || cert.q2 != expected.q2) {
    return Verification::fail("bipartite-counts-mismatch");
  }
  if (cert.m_star != expected.m_star) return Verification::fail("m-star-mismatch");
  if (cert.mu != expected.mu) return Verification::fail("mu-mismatch");
  if (static_cast<int>(cert.odd_components.size()) < cert.size_s() + 2) {
    return Verification::fail("too-few-odd-components");
  }
  return Verification::pass();
}

ExtensionResult extend_matching(const Graph& g, const Matching& m) {
  if (g.order() % 2 != 0) {
    throw std::domain_error("matching extension needs a graph of even order");
  }
  require_matching_of(g, m);
  VertexSet rest = complement(g.order(), m.covered());
  InducedSubgraph sub = induced_subgraph(g, rest);
  GallaiEdmonds ge = gallai_edmonds(sub.graph);

  ExtensionResult result;
  if (2 * ge.matching.size() == sub.graph.order()) {
    EdgeSet edges = m.edges();
    for (const Edge& e : ge.matching.edges()) {
      edges.push_back(make_edge(sub.to_host[e.u], sub.to_host[e.v]));
    }
    result.outcome = ExtensionOutcome::kExtended;
    result.perfect_matching = Matching(std::move(edges));
    return result;
  }
  VertexSet s;
  for (Vertex v : ge.a) s.push_back(sub.to_host[v]);
  result.outcome = ExtensionOutcome::kBlocked;
  result.barrier = make_barrier_certificate(g, m, normalize(std::move(s)));
  return result;
}

bool is_distance_d_matching(const Graph& g, const Matching& m, int d) {
  require_matching_of(g, m);
  const EdgeSet& edges = m.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto du = distances_from(g, edges[i].u);
    auto dv = distances_from(g, edges[i].v);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& f = edges[j];
      int dist = std::min({du[f.u], du[f.v], dv[f.u], dv[f.v]});
      if (dist < d) return false;
    }
  }
  return true;
}

std::optional<Vertex> heavy_neighbor_exists(const Graph& g, const Matching& m,
                                            int r) {
  if (m.empty()) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (m.covers(v)) continue;
    int count = 0;
    for (Vertex w : g.neighbors(v)) count += m.covers(w) ? 1 : 0;
    if (count >= r - 1) return v;
  }
  return std::nullopt;
}

Eq1Sides eq1_sides(const Graph& g, const Matching& m, const VertexSet& s) {
  std::optional<int> degree = is_regular(g);
  if (!degree) throw std::domain_error("eq1_sides needs a regular graph");
  require_matching_of(g, m);
  const long long r = *degree;
  VertexSet sn = normalize(s);
  for (Vertex v : sn) {
    if (!g.is_vertex(v) || m.covers(v)) {
      throw std::invalid_argument("S must be a subset of V(G) \\ V(M)");
    }
  }
  VertexSet removed = m.covered();
  removed.insert(removed.end(), sn.begin(), sn.end());
  VertexSet t = complement(g.order(), normalize(std::move(removed)));

  Eq1Sides out;
  out.s = static_cast<int>(sn.size());
  out.m_star = internal_edge_count(g, m.covered()) - m.size();
  out.mu = internal_edge_count(g, sn) + edges_between(g, sn, m.covered());
  out.lhs = static_cast<long long>(boundary_edges(g, t).size());
  const long long mm = m.size();
  out.rhs = out.s * r + 2 * (mm * r - mm - out.m_star - out.mu);
  return out;
}

}  // namespace earpack
