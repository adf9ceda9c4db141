#include "earpack/connectivity.h"

#include <gtest/gtest.h>

#include "earpack/flow.h"
#include "earpack/generators.h"
#include "earpack/named_graphs.h"
#include "oracles.h"
#include "test_support.h"

namespace earpack {
namespace {

void expect_sound(const Graph& g, const ConnectivityValue& v, bool odd) {
  if (!v.finite()) {
    EXPECT_FALSE(v.certificate);
    return;
  }
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(static_cast<int>(v.certificate->f.size()), v.value);
  Verification ok = verify_cut(g, *v.certificate, odd);
  EXPECT_TRUE(ok) << ok.reason;
}

TEST(CorpusTest, ConnectedCubicCounts) {
  // Known counts of connected cubic graphs on 4, 6, 8, 10 vertices.
  EXPECT_EQ(oracle::connected_cubic_graphs(4).size(), 1u);
  EXPECT_EQ(oracle::connected_cubic_graphs(6).size(), 2u);
  EXPECT_EQ(oracle::connected_cubic_graphs(8).size(), 5u);
  EXPECT_EQ(oracle::connected_cubic_graphs(10).size(), 19u);
}

TEST(OracleTest, EdgeAndSideOraclesAgree) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::random_graph(rng.uniform_int(6, 10), 0.35, rng);
    if (g.size() > 22) continue;
    for (bool odd : {false, true}) {
      EXPECT_EQ(oracle::min_cyclic_cut_by_edges(g, odd),
                oracle::min_cyclic_cut_by_sides(g, odd));
    }
  }
}

TEST(MinCutTest, Examples) {
  Graph c4 = named::cycle(4);
  MinCut adjacent = min_cut_between(c4, {0}, {1});
  EXPECT_EQ(adjacent.size, 2);
  EXPECT_EQ(adjacent.edges.size(), 2u);

  std::vector<Edge> two_edges = {{0, 1}, {2, 3}};
  MinCut apart = min_cut_between(Graph(4, two_edges), {0}, {2});
  EXPECT_EQ(apart.size, 0);
  EXPECT_TRUE(apart.edges.empty());

  MinCut spokes = min_cut_between(named::petersen(), {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9});
  EXPECT_EQ(spokes.size, 5);
  EXPECT_EQ(spokes.edges, (EdgeSet{{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}));
  EXPECT_EQ(spokes.source_side, (VertexSet{0, 1, 2, 3, 4}));
}

TEST(CyclicConnectivityTest, NamedGraphs) {
  EXPECT_EQ(cyclic_edge_connectivity(named::complete_bipartite(3, 3)).value, kInfinity);
  EXPECT_EQ(cyclic_edge_connectivity(named::complete(4)).value, kInfinity);

  ConnectivityValue p = cyclic_edge_connectivity(named::petersen());
  EXPECT_EQ(p.value, 5);
  expect_sound(named::petersen(), p, false);

  ConnectivityValue h = cyclic_edge_connectivity(named::heawood());
  EXPECT_EQ(h.value, 6);
  expect_sound(named::heawood(), h, false);

  EXPECT_EQ(cyclic_edge_connectivity(named::prism()).value, 3);
}

TEST(CyclicConnectivityTest, TieBreakIsLexicographic) {
  // Prism: the only cyclic 3-cut is the matching between the triangles.
  ConnectivityValue v = cyclic_edge_connectivity(named::prism());
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.certificate->f, (EdgeSet{{0, 3}, {1, 4}, {2, 5}}));
  // Repeated calls give the same certificate.
  EXPECT_EQ(*cyclic_edge_connectivity(named::prism()).certificate, *v.certificate);
}

TEST(OddCyclicConnectivityTest, NamedGraphs) {
  EXPECT_EQ(odd_cyclic_edge_connectivity(named::heawood()).value, kInfinity);
  EXPECT_EQ(odd_cyclic_edge_connectivity(named::complete_bipartite(3, 3)).value,
            kInfinity);
  EXPECT_EQ(odd_cyclic_edge_connectivity(named::cycle(8)).value, kInfinity);

  ConnectivityValue p = odd_cyclic_edge_connectivity(named::petersen());
  EXPECT_EQ(p.value, 5);
  expect_sound(named::petersen(), p, true);

  ConnectivityValue prism = odd_cyclic_edge_connectivity(named::prism());
  EXPECT_EQ(prism.value, 3);
  expect_sound(named::prism(), prism, true);
}

TEST(ConnectivityTest, MatchesOracleOnCubicCorpus) {
  for (int n = 4; n <= 10; n += 2) {
    for (const Graph& g : oracle::connected_cubic_graphs(n)) {
      ConnectivityValue c = cyclic_edge_connectivity(g);
      ConnectivityValue o = odd_cyclic_edge_connectivity(g);
      EXPECT_EQ(c.value, oracle::min_cyclic_cut_by_edges(g, false));
      EXPECT_EQ(o.value, oracle::min_cyclic_cut_by_edges(g, true));
      expect_sound(g, c, false);
      expect_sound(g, o, true);
      if (!bipartition(g)) {
        EXPECT_GE(o.value, c.value);
      } else {
        EXPECT_EQ(o.value, kInfinity);
      }
    }
  }
}

TEST(ConnectivityTest, MatchesOracleOnRandomGraphs) {
  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testing::random_graph(rng.uniform_int(5, 11), 0.3, rng);
    for (bool odd : {false, true}) {
      ConnectivityValue v =
          odd ? odd_cyclic_edge_connectivity(g) : cyclic_edge_connectivity(g);
      EXPECT_EQ(v.value, oracle::min_cyclic_cut_by_sides(g, odd));
      expect_sound(g, v, odd);
    }
  }
}

// In an r-regular graph, a side with an odd number of vertices sends out a
// number of edges congruent to r modulo 2.
TEST(ConnectivityTest, CertificateParityInRegularGraphs) {
  for (int seed = 0; seed < 30; ++seed) {
    const int r = 3 + seed % 2;
    const int n = r == 3 ? 10 + 2 * (seed % 3) : 9 + seed % 3;
    Graph g = random_regular(n, r, seed);
    for (bool odd : {false, true}) {
      ConnectivityValue v =
          odd ? odd_cyclic_edge_connectivity(g) : cyclic_edge_connectivity(g);
      if (!v.finite()) continue;
      for (const VertexSet* side : {&v.certificate->side_a, &v.certificate->side_b}) {
        if (side->size() % 2 == 1) {
          EXPECT_EQ(static_cast<int>(v.certificate->f.size()) % 2, r % 2);
        }
      }
    }
  }
}

// Any vertex set whose induced subgraph has a cycle contains a chordless
// cycle of the host graph.
TEST(ConnectivityTest, ChordlessCyclesCoverEveryCyclicSide) {
  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_graph(10, 0.35, rng);
    CycleList list = chordless_cycles(g, g.order());
    for (int sample = 0; sample < 20; ++sample) {
      VertexSet side;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (rng.chance(0.6)) side.push_back(v);
      }
      InducedSubgraph h = induced_subgraph(g, side);
      if (girth(h.graph) == kInfinity) continue;
      bool found = false;
      for (const auto& c : list.cycles) {
        if (std::all_of(c.begin(), c.end(), [&](Vertex v) {
              return std::binary_search(side.begin(), side.end(), v);
            })) {
          found = true;
          break;
        }
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(ConnectivityTest, CapsRaiseInexactWithBound) {
  SearchBudget tiny;
  tiny.max_cycles = 5;
  try {
    cyclic_edge_connectivity(named::petersen(), tiny);
    FAIL() << "cap ignored";
  } catch (const InexactError& e) {
    EXPECT_GE(e.upper_bound(), 5);
  }
  SearchBudget few_pairs;
  few_pairs.max_cycle_pairs = 1;
  try {
    cyclic_edge_connectivity(named::heawood(), few_pairs);
    FAIL() << "pair cap ignored";
  } catch (const InexactError& e) {
    EXPECT_GE(e.upper_bound(), 6);
    EXPECT_NE(e.upper_bound(), kInfinity);
  }
}

TEST(VerifyCutTest, ReasonCodes) {
  Graph p = named::petersen();
  CutCertificate spokes;
  spokes.f = {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
  spokes.side_a = {0, 1, 2, 3, 4};
  spokes.side_b = {5, 6, 7, 8, 9};
  spokes.cycle_a = {0, 1, 2, 3, 4};
  spokes.cycle_b = {5, 7, 9, 6, 8};
  spokes.odd = true;
  EXPECT_TRUE(verify_cut(p, spokes, true));

  CutCertificate crossing = spokes;
  crossing.cycle_a = {0, 1, 6, 8, 5};
  EXPECT_EQ(verify_cut(p, crossing, false).reason, "cycle-a-crosses-cut");

  CutCertificate wrong_f = spokes;
  wrong_f.f.pop_back();
  EXPECT_EQ(verify_cut(p, wrong_f, false).reason, "cut-mismatch");

  CutCertificate lying = spokes;
  lying.odd = false;
  EXPECT_EQ(verify_cut(p, lying, false).reason, "odd-flag-mismatch");

  CutCertificate overlap = spokes;
  overlap.side_b.insert(overlap.side_b.begin(), 4);
  EXPECT_EQ(verify_cut(p, overlap, false).reason, "sides-not-partition");

  // Bipartite host: any cycle is even, so the odd requirement fails.
  Graph h = named::heawood();
  ConnectivityValue v = cyclic_edge_connectivity(h);
  ASSERT_TRUE(v.certificate);
  EXPECT_TRUE(verify_cut(h, *v.certificate, false));
  EXPECT_EQ(verify_cut(h, *v.certificate, true).reason, "cycle-a-not-odd");
}

}  // namespace
}  // namespace earpack
