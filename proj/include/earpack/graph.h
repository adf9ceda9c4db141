#ifndef EARPACK_GRAPH_H_
#define EARPACK_GRAPH_H_

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace earpack {

using Vertex = int;

// Stands in for an unbounded distance, girth or connectivity value.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
};

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Sorted, duplicate-free vertex indices.
using VertexSet = std::vector<Vertex>;
// Sorted, duplicate-free edges.
using EdgeSet = std::vector<Edge>;

VertexSet normalize(VertexSet vertices);
EdgeSet normalize(EdgeSet edges);

// Raised for structurally invalid graphs (loops, parallel edges, bad index).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted, so iteration order is the index order and
/// every algorithm built on top scans lowest-index-first. Instances are
/// immutable once constructed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  // Throws GraphError on loops, repeated edges or out-of-range endpoints.
  Graph(int order, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool is_vertex(Vertex v) const { return v >= 0 && v < order(); }

  // All edges in lexicographic order.
  EdgeSet edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Elementary structure queries.

// BFS distances from `source`; unreachable vertices get kInfinity.
std::vector<int> distances_from(const Graph& g, Vertex source);

int vertex_distance(const Graph& g, Vertex u, Vertex v);

/// Length of a shortest path joining an endvertex of `e` to an endvertex of
/// `f`. Only defined for distinct edges; throws std::domain_error if e == f
/// and std::invalid_argument if either is not an edge of g.
int edge_distance(const Graph& g, Edge e, Edge f);

// Common degree, or nullopt when degrees differ. The empty graph is 0-regular.
std::optional<int> is_regular(const Graph& g);

struct Bipartition {
  VertexSet black;  // holds the lowest-indexed vertex of every component
  VertexSet white;
};
std::optional<Bipartition> bipartition(const Graph& g);

int girth(const Graph& g);

// Some shortest cycle as a vertex sequence, empty for forests.
std::vector<Vertex> shortest_cycle(const Graph& g);

struct CycleList {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<bool> odd;
  bool truncated = false;
};

/// Chordless cycles of length at most `max_len`, each reported once.
///
/// A cycle is listed starting at its smallest vertex and oriented so that the
/// second vertex is smaller than the last. Output is sorted by length, then
/// lexicographically. When more than `cap` cycles exist the list holds the
/// first `cap` found and `truncated` is set.
CycleList chordless_cycles(const Graph& g, int max_len,
                           std::size_t cap = 1'000'000);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;    // subgraph index -> host index
  std::vector<Vertex> from_host;  // host index -> subgraph index or -1
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// E(X, V \ X).
EdgeSet boundary_edges(const Graph& g, const VertexSet& vertices);

// Number of edges with both ends in X.
int internal_edge_count(const Graph& g, const VertexSet& vertices);
// |E(X, Y)| for disjoint X, Y.
int edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);

// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

VertexSet complement(int order, const VertexSet& vertices);

}  // namespace earpack

#endif  // EARPACK_GRAPH_H_
