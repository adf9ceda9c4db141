#include "earpack/matching.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "earpack/graph_io.h"
#include "earpack/named_graphs.h"
#include "test_support.h"

namespace earpack {
namespace {

using testing::edges_matching;
using testing::random_graph;
using testing::random_matching;

// Exhaustive matching number: branch on the lowest unmatched vertex.
int brute_matching_number(const Graph& g, std::vector<bool>& gone, Vertex from = 0) {
  while (from < g.order() && gone[from]) ++from;
  if (from >= g.order()) return 0;
  gone[from] = true;
  int best = brute_matching_number(g, gone, from + 1);
  for (Vertex w : g.neighbors(from)) {
    if (gone[w]) continue;
    gone[w] = true;
    best = std::max(best, 1 + brute_matching_number(g, gone, from + 1));
    gone[w] = false;
  }
  gone[from] = false;
  return best;
}

int brute_matching_number(const Graph& g, const VertexSet& removed = {}) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : removed) gone[v] = true;
  return brute_matching_number(g, gone);
}

bool has_perfect_matching_avoiding(const Graph& g, const VertexSet& removed) {
  int remaining = g.order() - static_cast<int>(removed.size());
  return 2 * brute_matching_number(g, removed) == remaining;
}

// Circulant graph on n vertices with the given jumps.
Graph circulant(int n, std::vector<int> jumps) {
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j : jumps) edges.insert(make_edge(i, (i + j) % n));
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

TEST(MatchingTest, RejectsOverlappingEdges) {
  EXPECT_THROW(Matching(EdgeSet{{0, 1}, {1, 2}}), std::invalid_argument);
  Matching m(EdgeSet{{2, 3}, {0, 1}});
  EXPECT_EQ(m.size(), 2);
  EXPECT_EQ(m.covered(), (VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(m.covers(3));
  EXPECT_FALSE(m.covers(4));
}

TEST(MatchingTest, RequireMatchingOfGraph) {
  Graph c4 = named::cycle(4);
  EXPECT_NO_THROW(require_matching_of(c4, edges_matching({{0, 1}, {2, 3}})));
  EXPECT_THROW(require_matching_of(c4, edges_matching({{0, 2}})), std::invalid_argument);
}

TEST(MaximumMatchingTest, AgreesWithExhaustiveSearch) {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform_int(1, 12);
    Graph g = random_graph(n, trial % 3 == 0 ? 0.15 : 0.35, rng);
    Matching m = maximum_matching(g);
    EXPECT_NO_THROW(require_matching_of(g, m));
    EXPECT_EQ(m.size(), brute_matching_number(g)) << serialize_graph(g, GraphFormat::kGraph6);
  }
}

TEST(MaximumMatchingTest, NamedGraphs) {
  EXPECT_EQ(maximum_matching(named::petersen()).size(), 5);
  EXPECT_EQ(maximum_matching(named::complete(7)).size(), 3);
  EXPECT_EQ(maximum_matching(named::star(5)).size(), 1);
  EXPECT_EQ(maximum_matching(named::tutte_coxeter()).size(), 15);
  EXPECT_EQ(maximum_matching(named::empty(3)).size(), 0);
}

TEST(GallaiEdmondsTest, AgreesWithDeletionCharacterization) {
  Rng rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng.uniform_int(1, 11), 0.25, rng);
    GallaiEdmonds ge = gallai_edmonds(g);
    const int nu = brute_matching_number(g);
    EXPECT_EQ(ge.matching.size(), nu);
    VertexSet d;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (brute_matching_number(g, {v}) == nu) d.push_back(v);
    }
    EXPECT_EQ(ge.d, d);
    VertexSet a;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (std::binary_search(d.begin(), d.end(), v)) continue;
      for (Vertex w : g.neighbors(v)) {
        if (std::binary_search(d.begin(), d.end(), w)) {
          a.push_back(v);
          break;
        }
      }
    }
    EXPECT_EQ(ge.a, a);
    EXPECT_EQ(ge.d.size() + ge.a.size() + ge.c.size(),
              static_cast<std::size_t>(g.order()));
  }
}

TEST(ExtendMatchingTest, OddOrderIsRejected) {
  EXPECT_THROW(extend_matching(named::complete(5), Matching()), std::domain_error);
}

TEST(ExtendMatchingTest, ForeignEdgeIsRejected) {
  EXPECT_THROW(extend_matching(named::cycle(6), edges_matching({{0, 3}})),
               std::invalid_argument);
}

TEST(ExtendMatchingTest, ExtendsInK4) {
  ExtensionResult r = extend_matching(named::complete(4), edges_matching({{0, 1}}));
  ASSERT_TRUE(r.extended());
  EXPECT_EQ(r.perfect_matching->edges(), (EdgeSet{{0, 1}, {2, 3}}));
}

TEST(ExtendMatchingTest, BlockedOnC6) {
  // {1,2} and {4,5} strand the nonadjacent vertices 0 and 3.
  Graph c6 = named::cycle(6);
  ExtensionResult r = extend_matching(c6, edges_matching({{1, 2}, {4, 5}}));
  ASSERT_FALSE(r.extended());
  ASSERT_TRUE(r.barrier);
  EXPECT_TRUE(r.barrier->s.empty());
  EXPECT_EQ(r.barrier->odd_components.size(), 2u);
  EXPECT_TRUE(verify_barrier(c6, edges_matching({{1, 2}, {4, 5}}), *r.barrier));
}

TEST(ExtendMatchingTest, OutcomeAgreesWithExhaustiveSearch) {
  Rng rng(303);
  int blocked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 * rng.uniform_int(1, 6);
    Graph g = random_graph(n, 0.4, rng);
    Matching m = random_matching(g, rng.uniform_int(0, 2), rng);
    ExtensionResult r = extend_matching(g, m);
    bool possible = has_perfect_matching_avoiding(g, m.covered());
    ASSERT_EQ(r.extended(), possible);
    if (r.extended()) {
      const Matching& pm = *r.perfect_matching;
      EXPECT_EQ(2 * pm.size(), n);
      EXPECT_NO_THROW(require_matching_of(g, pm));
      for (const Edge& e : m.edges()) {
        EXPECT_TRUE(std::binary_search(pm.edges().begin(), pm.edges().end(), e));
      }
    } else {
      ++blocked;
      EXPECT_TRUE(verify_barrier(g, m, *r.barrier)) << verify_barrier(g, m, *r.barrier).reason;
      EXPECT_GE(r.barrier->odd_components.size(), r.barrier->s.size() + 2);
    }
  }
  EXPECT_GT(blocked, 20);
}

TEST(VerifyBarrierTest, ReasonCodes) {
  Graph c6 = named::cycle(6);
  Matching m = edges_matching({{1, 2}, {4, 5}});
  BarrierCertificate good = make_barrier_certificate(c6, m, {});
  ASSERT_TRUE(verify_barrier(c6, m, good));

  BarrierCertificate bad = good;
  bad.s = {1};
  EXPECT_EQ(verify_barrier(c6, m, bad).reason, "s-meets-matching");

  bad = good;
  bad.mu = 7;
  EXPECT_EQ(verify_barrier(c6, m, bad).reason, "mu-mismatch");

  bad = good;
  bad.odd_components.pop_back();
  EXPECT_EQ(verify_barrier(c6, m, bad).reason, "odd-components-mismatch");

  // A certificate that is internally consistent but does not block.
  Matching small = edges_matching({{0, 1}});
  BarrierCertificate weak = make_barrier_certificate(c6, small, {});
  EXPECT_EQ(verify_barrier(c6, small, weak).reason, "too-few-odd-components");

  EXPECT_THROW(make_barrier_certificate(c6, m, {2}), std::invalid_argument);
}

TEST(DistanceMatchingTest, CycleOfSix) {
  Graph c6 = named::cycle(6);
  Matching opposite = edges_matching({{0, 1}, {3, 4}});
  EXPECT_TRUE(is_distance_d_matching(c6, opposite, 2));
  EXPECT_FALSE(is_distance_d_matching(c6, opposite, 3));
  Matching adjacent = edges_matching({{0, 1}, {2, 3}});
  EXPECT_TRUE(is_distance_d_matching(c6, adjacent, 1));
  EXPECT_FALSE(is_distance_d_matching(c6, adjacent, 2));
  EXPECT_TRUE(is_distance_d_matching(c6, edges_matching({{0, 1}}), 100));
}

TEST(HeavyNeighborTest, Detection) {
  Graph k4 = named::complete(4);
  EXPECT_EQ(heavy_neighbor_exists(k4, edges_matching({{0, 1}}), 3), 2);
  EXPECT_EQ(heavy_neighbor_exists(k4, Matching(), 3), std::nullopt);
  Graph c6 = named::cycle(6);
  // In C6 with r = 2, any neighbor of V(M) is heavy.
  EXPECT_EQ(heavy_neighbor_exists(c6, edges_matching({{0, 1}}), 2), 2);
  EXPECT_EQ(heavy_neighbor_exists(named::petersen(), edges_matching({{0, 1}}), 3),
            std::nullopt);
}

TEST(Eq1Test, CompleteGraphOnFour) {
  Eq1Sides sides = eq1_sides(named::complete(4), edges_matching({{0, 1}}), {});
  EXPECT_EQ(sides.lhs, 4);
  EXPECT_EQ(sides.rhs, 4);
  EXPECT_EQ(sides.m_star, 0);
  EXPECT_EQ(sides.mu, 0);
  EXPECT_THROW(eq1_sides(named::star(3), Matching(), {}), std::domain_error);
}

TEST(Eq1Test, HoldsForRandomMatchingsAndSets) {
  Rng rng(404);
  std::vector<Graph> graphs = {named::petersen(), named::heawood(),
                               named::tutte_coxeter(), circulant(12, {1, 3, 6}),
                               circulant(11, {1, 2}), circulant(14, {1, 4, 7}),
                               *named::projective_plane_incidence(3)};
  for (const Graph& g : graphs) {
    for (int trial = 0; trial < 60; ++trial) {
      Matching m = random_matching(g, rng.uniform_int(1, 4), rng);
      VertexSet outside = complement(g.order(), m.covered());
      VertexSet s;
      for (Vertex v : outside) {
        if (rng.chance(0.2)) s.push_back(v);
      }
      Eq1Sides sides = eq1_sides(g, m, s);
      EXPECT_EQ(sides.lhs, sides.rhs);
      // Independent count of |E(T, T-bar)| from the vertex sets.
      VertexSet removed = normalize([&] {
        VertexSet all = m.covered();
        all.insert(all.end(), s.begin(), s.end());
        return all;
      }());
      VertexSet t = complement(g.order(), removed);
      EXPECT_EQ(sides.lhs, static_cast<long long>(boundary_edges(g, t).size()));
    }
  }
}

}  // namespace
}  // namespace earpack
