#ifndef EARPACK_FLOW_H_
#define EARPACK_FLOW_H_

#include <vector>

#include "earpack/graph.h"

namespace earpack {

// Integer-capacity network solved with Dinic's algorithm. Arcs are scanned
// in insertion order so results are reproducible.
class FlowNetwork {
 public:
  static constexpr int kUnbounded = 1 << 29;

  explicit FlowNetwork(int nodes);

  int node_count() const { return static_cast<int>(out_.size()); }

  // Directed arc; returns its id. The paired residual arc has id ^ 1.
  int add_arc(int from, int to, int capacity);
  // Undirected edge: both directions share one unit of capacity each way.
  int add_edge(int a, int b, int capacity);

  // Augments until the flow reaches `limit` or no path remains. May be
  // called again with a larger limit to continue.
  int max_flow(int source, int sink, int limit = kUnbounded);

  int flow_on(int arc) const { return arcs_[arc].flow; }
  int from(int arc) const { return arcs_[arc ^ 1].to; }
  int to(int arc) const { return arcs_[arc].to; }

  // Nodes reachable from `source` in the residual network.
  std::vector<bool> source_side(int source) const;

  // Walks of unit flow from source to sink with cycles removed, each given
  // as the node sequence. Consumes nothing; call after max_flow.
  std::vector<std::vector<int>> decompose_paths(int source, int sink) const;

 private:
  struct Arc {
    int to;
    int capacity;
    int flow;
  };

  bool build_levels(int source, int sink);
  int push(int v, int sink, int limit);

  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
  std::vector<std::vector<int>> out_;  // arcs per node in insertion order
};

struct MinCut {
  int size = 0;
  EdgeSet edges;
  VertexSet source_side;  // contains X
};

/// Minimum number of edges separating X from Y, with the cut closest to X.
/// Requires X and Y nonempty and disjoint. When `limit` is given the search
/// stops once `limit` edge-disjoint paths are found; the returned size is
/// then `limit` and the cut fields are left empty.
MinCut min_cut_between(const Graph& g, const VertexSet& x, const VertexSet& y,
                       int limit = FlowNetwork::kUnbounded);

// Maximum number of edge-disjoint (X, Y)-walks.
int edge_disjoint_paths(const Graph& g, const VertexSet& x, const VertexSet& y);

// Maximum number of vertex-disjoint paths from X to Y.
int vertex_disjoint_paths(const Graph& g, const VertexSet& x,
                          const VertexSet& y);

}  // namespace earpack

#endif  // EARPACK_FLOW_H_
