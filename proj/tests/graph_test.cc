#include "earpack/graph.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "earpack/graph_io.h"
#include "earpack/named_graphs.h"
#include "test_support.h"

namespace earpack {
namespace {

using testing::random_graph;

TEST(GraphTest, RejectsLoopsAndParallelEdges) {
  std::vector<Edge> loop = {{1, 1}};
  EXPECT_THROW(Graph(3, loop), GraphError);
  std::vector<Edge> twice = {{0, 1}, {0, 1}};
  EXPECT_THROW(Graph(3, twice), GraphError);
  std::vector<Edge> outside = {{0, 3}};
  EXPECT_THROW(Graph(3, outside), GraphError);
}

TEST(GraphTest, AdjacencyIsSortedAndSymmetric) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(12, 0.3, rng);
    for (Vertex v = 0; v < g.order(); ++v) {
      auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) {
        EXPECT_NE(v, w);
        EXPECT_TRUE(g.has_edge(w, v));
      }
    }
  }
}

TEST(ParseGraphTest, EdgeListTriangle) {
  Graph g = parse_graph("0 1\n1 2\n2 0", GraphFormat::kEdgeList);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(serialize_graph(g, GraphFormat::kEdgeList), "0 1\n0 2\n1 2");
}

TEST(ParseGraphTest, EdgeListErrorsCarryOffsets) {
  try {
    parse_graph("0 1\n0 0\n", GraphFormat::kEdgeList);
    FAIL() << "loop accepted";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  try {
    parse_graph("0 1\n1 2\n1 0\n", GraphFormat::kEdgeList);
    FAIL() << "parallel edge accepted";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.offset(), 8u);
  }
  EXPECT_THROW(parse_graph("0 x\n", GraphFormat::kEdgeList), FormatError);
  EXPECT_THROW(parse_graph("0 1 2\n", GraphFormat::kEdgeList), FormatError);
  EXPECT_THROW(parse_graph("-1 2\n", GraphFormat::kEdgeList), FormatError);
  EXPECT_THROW(parse_graph("# vertices 2\n0 5\n", GraphFormat::kEdgeList),
               FormatError);
}

TEST(ParseGraphTest, EdgeListCommentsAndVertexCount) {
  Graph g = parse_graph("# a comment\n# vertices 4\n\n0 1\n", GraphFormat::kEdgeList);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(serialize_graph(g, GraphFormat::kEdgeList), "# vertices 4\n0 1");
  Graph empty4 = named::empty(4);
  EXPECT_EQ(parse_graph(serialize_graph(empty4, GraphFormat::kEdgeList),
                        GraphFormat::kEdgeList),
            empty4);
}

TEST(ParseGraphTest, Graph6Fixtures) {
  // Reference strings produced by an independent graph6 writer.
  EXPECT_EQ(serialize_graph(named::petersen(), GraphFormat::kGraph6), "IheA@GUAo");
  EXPECT_EQ(serialize_graph(named::heawood(), GraphFormat::kGraph6),
            "MhEGHC@AI?_PC@_G_");
  Graph d = parse_graph("D?{", GraphFormat::kGraph6);
  EXPECT_EQ(d.order(), 5);
  EXPECT_EQ(serialize_graph(d, GraphFormat::kGraph6), "D?{");
  EXPECT_EQ(parse_graph(">>graph6<<IheA@GUAo\n", GraphFormat::kGraph6),
            named::petersen());
}

TEST(ParseGraphTest, Graph6Errors) {
  EXPECT_THROW(parse_graph("", GraphFormat::kGraph6), FormatError);
  EXPECT_THROW(parse_graph("D?", GraphFormat::kGraph6), FormatError);
  EXPECT_THROW(parse_graph("D?{?", GraphFormat::kGraph6), FormatError);
  try {
    parse_graph("D {", GraphFormat::kGraph6);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  // "B" encodes 3 vertices; the single body byte has 3 data bits and 3 pad
  // bits, the last of which is set here.
  EXPECT_THROW(parse_graph("B@", GraphFormat::kGraph6), FormatError);
}

TEST(ParseGraphTest, RoundTripsRandomGraphs) {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform_int(0, trial < 50 ? 20 : 70);
    Graph g = random_graph(n, 0.25, rng);
    for (auto fmt : {GraphFormat::kGraph6, GraphFormat::kEdgeList}) {
      std::string text = serialize_graph(g, fmt);
      Graph back = parse_graph(text, fmt);
      EXPECT_EQ(back, g);
      EXPECT_EQ(serialize_graph(back, fmt), text);
    }
  }
}

TEST(DistanceTest, VertexDistance) {
  Graph p = named::path(3);
  EXPECT_EQ(vertex_distance(p, 1, 1), 0);
  EXPECT_EQ(vertex_distance(p, 0, 2), 2);
  std::vector<Edge> two_triangles = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  Graph t(6, two_triangles);
  EXPECT_EQ(vertex_distance(t, 0, 4), kInfinity);
}

TEST(DistanceTest, EdgeDistance) {
  Graph p = named::path(4);
  EXPECT_EQ(edge_distance(p, {0, 1}, {1, 2}), 0);
  EXPECT_EQ(edge_distance(p, {0, 1}, {2, 3}), 1);
  Graph c6 = named::cycle(6);
  EXPECT_EQ(edge_distance(c6, {0, 1}, {3, 4}), 2);
  EXPECT_THROW(edge_distance(c6, {0, 1}, {0, 1}), std::domain_error);
  EXPECT_THROW(edge_distance(c6, {0, 1}, {0, 3}), std::invalid_argument);
}

TEST(DistanceTest, EdgeDistanceIsSymmetricMinimumOverEndpoints) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(10, 0.3, rng);
    EdgeSet edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const Edge e = edges[i], f = edges[j];
        int d = edge_distance(g, e, f);
        EXPECT_EQ(d, edge_distance(g, f, e));
        int best = kInfinity;
        for (Vertex a : {e.u, e.v}) {
          for (Vertex b : {f.u, f.v}) {
            int vd = vertex_distance(g, a, b);
            EXPECT_LE(d, vd);
            best = std::min(best, vd);
          }
        }
        EXPECT_EQ(d, best);
      }
    }
  }
}

TEST(StructureTest, Regularity) {
  EXPECT_EQ(is_regular(named::petersen()), 3);
  EXPECT_EQ(is_regular(named::star(3)), std::nullopt);
  EXPECT_EQ(is_regular(named::empty(4)), 0);
}

TEST(StructureTest, Bipartition) {
  auto c4 = bipartition(named::cycle(4));
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->black, (VertexSet{0, 2}));
  EXPECT_EQ(c4->white, (VertexSet{1, 3}));
  EXPECT_FALSE(bipartition(named::complete(3)));
  auto h = bipartition(named::heawood());
  ASSERT_TRUE(h);
  EXPECT_EQ(h->black.size(), 7u);
  EXPECT_EQ(h->white.size(), 7u);
  for (const Edge& e : named::heawood().edges()) {
    bool u_black = std::binary_search(h->black.begin(), h->black.end(), e.u);
    bool v_black = std::binary_search(h->black.begin(), h->black.end(), e.v);
    EXPECT_NE(u_black, v_black);
  }
}

TEST(StructureTest, Girth) {
  EXPECT_EQ(girth(named::path(5)), kInfinity);
  EXPECT_EQ(girth(named::petersen()), 5);
  EXPECT_EQ(girth(named::complete_bipartite(3, 3)), 4);
  EXPECT_EQ(girth(named::heawood()), 6);
  EXPECT_EQ(girth(named::tutte_coxeter()), 8);
  for (int q = 2; q <= 5; ++q) {
    Graph pg = *named::projective_plane_incidence(q);
    EXPECT_EQ(girth(pg), 6) << q;
    EXPECT_EQ(is_regular(pg), q + 1) << q;
  }
}

TEST(StructureTest, ShortestCycleIsACycleOfGirthLength) {
  for (const Graph& g : {named::petersen(), named::heawood(), named::tutte_coxeter(),
                         named::complete(4)}) {
    auto c = shortest_cycle(g);
    ASSERT_EQ(static_cast<int>(c.size()), girth(g));
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_TRUE(g.has_edge(c[i], c[(i + 1) % c.size()]));
    }
    EXPECT_EQ(normalize(c).size(), c.size());
  }
  EXPECT_TRUE(shortest_cycle(named::path(4)).empty());
}

bool chordless(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) return false;
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.has_edge(cycle[i], cycle[j])) return false;
    }
  }
  return normalize(cycle).size() == k;
}

TEST(ChordlessCyclesTest, SmallCases) {
  CycleList k4 = chordless_cycles(named::complete(4), 4);
  EXPECT_EQ(k4.cycles.size(), 4u);
  for (const auto& c : k4.cycles) EXPECT_EQ(c.size(), 3u);
  EXPECT_FALSE(k4.truncated);

  CycleList c5 = chordless_cycles(named::cycle(5), 5);
  ASSERT_EQ(c5.cycles.size(), 1u);
  EXPECT_TRUE(c5.odd[0]);

  EXPECT_TRUE(chordless_cycles(named::star(4), 10).cycles.empty());
  EXPECT_TRUE(chordless_cycles(named::cycle(5), 4).cycles.empty());
}

TEST(ChordlessCyclesTest, PetersenCounts) {
  // The Petersen graph has 12 five-cycles and 10 six-cycles, and every
  // longer cycle has a chord.
  CycleList all = chordless_cycles(named::petersen(), 10);
  std::map<std::size_t, int> by_len;
  for (const auto& c : all.cycles) ++by_len[c.size()];
  EXPECT_EQ(by_len[5], 12);
  EXPECT_EQ(by_len[6], 10);
  EXPECT_EQ(all.cycles.size(), 22u);
}

TEST(ChordlessCyclesTest, TruncationFlag) {
  CycleList capped = chordless_cycles(named::petersen(), 10, 3);
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(capped.cycles.size(), 3u);
}

TEST(ChordlessCyclesTest, RandomGraphsAreChordFreeAndMatchGirth) {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(10, 0.3, rng);
    CycleList list = chordless_cycles(g, g.order() < 3 ? 3 : g.order());
    int shortest = kInfinity;
    std::set<std::vector<Vertex>> canonical;
    for (std::size_t i = 0; i < list.cycles.size(); ++i) {
      const auto& c = list.cycles[i];
      EXPECT_TRUE(chordless(g, c));
      EXPECT_EQ(list.odd[i], c.size() % 2 == 1);
      shortest = std::min<int>(shortest, static_cast<int>(c.size()));
      EXPECT_TRUE(canonical.insert(normalize(c)).second) << "duplicate cycle";
    }
    EXPECT_EQ(shortest, girth(g));
  }
}

TEST(SubgraphTest, InducedSubgraph) {
  Graph p = named::petersen();
  EXPECT_EQ(induced_subgraph(p, {}).graph.order(), 0);
  VertexSet all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  EXPECT_EQ(induced_subgraph(p, all).graph, p);
  InducedSubgraph inner = induced_subgraph(p, complement(10, {0, 1, 2, 3, 4}));
  EXPECT_EQ(inner.graph.order(), 5);
  EXPECT_EQ(is_regular(inner.graph), 2);
  EXPECT_TRUE(is_connected(inner.graph));
  EXPECT_EQ(inner.to_host, (std::vector<Vertex>{5, 6, 7, 8, 9}));
}

TEST(SubgraphTest, BoundaryEdges) {
  Graph p = named::petersen();
  EXPECT_TRUE(boundary_edges(p, {}).empty());
  EXPECT_EQ(boundary_edges(p, {3}), (EdgeSet{{2, 3}, {3, 4}, {3, 8}}));
  std::vector<Edge> two_triangles = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  Graph t(6, two_triangles);
  EXPECT_TRUE(boundary_edges(t, {0, 1, 2}).empty());
}

// For an induced forest H of an r-regular graph, |E(H, H-bar)| equals
// r|V(H)| - 2|E(H)| and is at least r.
TEST(SubgraphTest, InducedForestBoundaryInRegularGraphs) {
  Rng rng(31);
  for (const Graph& g : {named::petersen(), named::heawood(), named::tutte_coxeter(),
                         *named::projective_plane_incidence(3)}) {
    const int r = *is_regular(g);
    for (int trial = 0; trial < 50; ++trial) {
      VertexSet tree = testing::random_induced_tree(
          g, static_cast<Vertex>(rng.below(g.order())),
          rng.uniform_int(1, g.order() / 2), rng);
      InducedSubgraph h = induced_subgraph(g, tree);
      ASSERT_EQ(h.graph.size(), h.graph.order() - 1);
      int boundary = static_cast<int>(boundary_edges(g, tree).size());
      EXPECT_EQ(boundary, r * h.graph.order() - 2 * h.graph.size());
      EXPECT_GE(boundary, r);
    }
  }
}

}  // namespace
}  // namespace earpack
