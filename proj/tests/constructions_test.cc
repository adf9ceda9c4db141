#include "earpack/constructions.h"

#include <gtest/gtest.h>

#include "earpack/ears.h"
#include "earpack/named_graphs.h"

namespace earpack {
namespace {

EdgeSet removed_edges(const Graph& full, const Graph& part) {
  EdgeSet all = full.edges(), kept = part.edges(), out;
  std::set_difference(all.begin(), all.end(), kept.begin(), kept.end(),
                      std::back_inserter(out));
  return out;
}

ConstructionOutput guaranteed_only(ConstructionOutput out) {
  std::erase_if(out.expectations,
                [](const Expectation& e) { return e.basis != Basis::kGuaranteed; });
  return out;
}

void expect_all_pass(const ConstructionOutput& out) {
  ExpectationReport report = verify_expectations(out);
  EXPECT_TRUE(report.ok());
  for (const ExpectationRow& row : report.rows) {
    if (row.expectation.basis == Basis::kGuaranteed) {
      EXPECT_EQ(row.status, RowStatus::kPass)
          << out.family << " " << property_name(row.expectation.property) << ": "
          << row.measured;
    } else {
      EXPECT_EQ(row.status, RowStatus::kReported);
    }
  }
}

// Independent of the barrier code: a perfect matching of G - V(M) exists
// iff the maximum matching covers every remaining vertex.
bool extends(const Graph& g, const Matching& m) {
  InducedSubgraph rest = induced_subgraph(g, complement(g.order(), m.covered()));
  return 2 * maximum_matching(rest.graph).size() == rest.graph.order();
}

TEST(BaseCatalogTest, Fixtures) {
  EXPECT_EQ(base_catalog(3, 4), named::complete_bipartite(3, 3));
  EXPECT_EQ(base_catalog(3, 6), named::heawood());
  EXPECT_EQ(base_catalog(3, 8), named::tutte_coxeter());
  auto plane = base_catalog(4, 6);
  ASSERT_TRUE(plane);
  EXPECT_EQ(is_regular(*plane), 4);
  EXPECT_TRUE(bipartition(*plane));
  EXPECT_GE(girth(*plane), 6);
  EXPECT_FALSE(base_catalog(3, 20));
}

TEST(BaseCatalogTest, GeneratedBasesAreVerified) {
  for (int g : {10, 12}) {
    auto base = base_catalog(3, g, 5);
    if (!base) continue;
    EXPECT_EQ(is_regular(*base), 3);
    EXPECT_TRUE(bipartition(*base));
    EXPECT_GE(girth(*base), g);
  }
  auto four = base_catalog(4, 8, 3);
  if (four) {
    EXPECT_EQ(is_regular(*four), 4);
    EXPECT_GE(girth(*four), 8);
  }
}

TEST(GammaTest, HeawoodSingleEdge) {
  DeficientBipartiteBase base = gamma(named::heawood(), 1, 1);
  EXPECT_EQ(base.ell(), 1);
  EXPECT_EQ(base.graph.size(), 20);
  int degree_two = 0;
  for (Vertex v = 0; v < base.graph.order(); ++v) degree_two += base.graph.degree(v) == 2;
  EXPECT_EQ(degree_two, 2);
  EXPECT_TRUE(validate_base(base)) << validate_base(base).reason;
}

TEST(GammaTest, TutteCoxeterTwoEdges) {
  Graph tc = named::tutte_coxeter();
  DeficientBipartiteBase base = gamma(tc, 2, 2);
  EXPECT_TRUE(validate_base(base)) << validate_base(base).reason;
  EdgeSet removed = removed_edges(tc, base.graph);
  ASSERT_EQ(removed.size(), 2u);
  EXPECT_GE(edge_distance(tc, removed[0], removed[1]), 3);
  EXPECT_EQ(base.linkage.size(), 2u);
  EXPECT_GE(base.measured.separation, 3);
  EXPECT_TRUE(base.measured.lambda_c.has_value());
}

TEST(GammaTest, Preconditions) {
  EXPECT_THROW(gamma(named::heawood(), 3, 3), std::invalid_argument);
  EXPECT_THROW(gamma(named::petersen(), 1, 1), std::invalid_argument);
  EXPECT_THROW(gamma(named::heawood(), 0, 1), std::invalid_argument);
}

TEST(GammaTest, RemovedEdgesAreSpacedMatchings) {
  Graph tc = named::tutte_coxeter();
  for (int d = 0; d <= 6; ++d) {
    DeficientBipartiteBase base = gamma(tc, 1, d);
    EXPECT_TRUE(validate_base(base));
  }
  for (int d = 0; d <= 2; ++d) {
    DeficientBipartiteBase base = gamma(tc, 2, d);
    EdgeSet removed = removed_edges(tc, base.graph);
    EXPECT_TRUE(is_distance_d_matching(tc, Matching(removed), d + 1));
  }
}

TEST(CycleBaseTest, MeetsRequestedPattern) {
  for (int r : {3, 4, 5}) {
    for (int ell : {1, 4, 7}) {
      DeficientBipartiteBase base = cycle_base(ell, r, 3, 11);
      EXPECT_EQ(base.ell(), ell);
      EXPECT_EQ(base.r, r);
      EXPECT_TRUE(validate_base(base)) << validate_base(base).reason;
      EXPECT_GE(base.measured.separation, 3);
      EXPECT_EQ(static_cast<int>(base.linkage.size()), ell);
    }
  }
}

TEST(CycleBaseTest, Deterministic) {
  DeficientBipartiteBase a = cycle_base(6, 3, 4, 99);
  DeficientBipartiteBase b = cycle_base(6, 3, 4, 99);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.side_b_deficient, b.side_b_deficient);
  EXPECT_EQ(a.linkage, b.linkage);
}

TEST(ValidateBaseTest, ReasonCodes) {
  DeficientBipartiteBase base = cycle_base(3, 3, 3, 1);
  ASSERT_TRUE(validate_base(base));

  DeficientBipartiteBase short_list = base;
  short_list.side_w_deficient.pop_back();
  EXPECT_EQ(validate_base(short_list).reason, "deficiency-count-mismatch");

  DeficientBipartiteBase swapped = base;
  std::swap(swapped.side_b_deficient, swapped.side_w_deficient);
  EXPECT_EQ(validate_base(swapped).reason, "colour-class-mismatch");

  DeficientBipartiteBase wrong_r = base;
  wrong_r.r = 4;
  EXPECT_EQ(validate_base(wrong_r).reason, "degree-mismatch");

  DeficientBipartiteBase bent = base;
  std::swap(bent.linkage[0], bent.linkage[1]);
  EXPECT_EQ(validate_base(bent).reason, "linkage-invalid");
}

TEST(CounterexampleTest, SmallestInstance) {
  const int k = 2;
  ConstructionOutput out = build_family(Family::kLemma3Counterexample, k, 3, 1);
  EXPECT_TRUE(validate_output(out));
  EXPECT_EQ(is_regular(out.graph), 3);
  EXPECT_TRUE(bipartition(out.graph));
  EXPECT_EQ(out.matching.size(), 2 * k + 1);
  EXPECT_TRUE(is_distance_d_matching(out.graph, out.matching, 4));
  PackingResult ears = max_odd_ear_packing(out.graph, out.matching.covered());
  ASSERT_TRUE(ears.exact());
  EXPECT_LE(ears.packing.k(), 5 * k + 4);
  EXPECT_TRUE(verify_packing(out.graph, ears.packing));
  expect_all_pass(guaranteed_only(out));
}

TEST(CounterexampleTest, Preconditions) {
  EXPECT_THROW(build_family(Family::kLemma3Counterexample, 1, 3, 1), std::invalid_argument);
  EXPECT_THROW(build_lemma3_counterexample(2, cycle_base(9, 3, 3, 1)), std::invalid_argument);
  EXPECT_THROW(build_lemma3_counterexample(2, cycle_base(10, 3, 1, 1)),
               std::invalid_argument);
}

TEST(SharpnessITest, SmallestInstance) {
  ConstructionOutput out = build_family(Family::kSharpnessI, 2, 3, 1);
  EXPECT_TRUE(validate_output(out));
  EXPECT_EQ(is_regular(out.graph), 3);
  EXPECT_EQ(out.graph.order() % 2, 0);
  EXPECT_FALSE(extends(out.graph, out.matching));
  BarrierCertificate cert = make_barrier_certificate(out.graph, out.matching, out.barrier_s);
  EXPECT_TRUE(verify_barrier(out.graph, out.matching, cert));
  // |S| + 1 isolated vertices and one further odd component.
  int singletons = 0;
  for (const VertexSet& c : cert.all_components) singletons += c.size() == 1;
  EXPECT_EQ(singletons, cert.size_s() + 1);
  EXPECT_EQ(cert.all_components.size(), cert.s.size() + 2);
  EXPECT_EQ(cert.odd_components.size(), cert.s.size() + 2);
  expect_all_pass(out);
}

TEST(SharpnessLambdaTest, OddAndEvenCases) {
  for (auto [m, r] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
    ConstructionOutput out = build_family(Family::kSharpnessLambda, m, r, 2);
    EXPECT_EQ(is_regular(out.graph), r);
    EXPECT_FALSE(extends(out.graph, out.matching));
    InducedSubgraph rest =
        induced_subgraph(out.graph, complement(out.graph.order(), out.matching.covered()));
    auto comps = connected_components(rest.graph);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].size() % 2, 1u);
    EXPECT_EQ(comps[1].size() % 2, 1u);
    const bool even = m % 2 == 0 && r % 2 == 0;
    const int cut = static_cast<int>(boundary_edges(out.graph, out.cut_side).size());
    EXPECT_EQ(cut, even ? m * (r - 1) : m * (r - 1) - 1);
    expect_all_pass(guaranteed_only(out));
  }
}

TEST(SharpnessLambdaTest, ReportsAsymptoticRows) {
  ConstructionOutput out = build_family(Family::kSharpnessLambda, 2, 3, 2);
  ExpectationReport report = verify_expectations(out);
  EXPECT_TRUE(report.ok());
  int reported = 0;
  for (const ExpectationRow& row : report.rows) reported += row.status == RowStatus::kReported;
  EXPECT_EQ(reported, 2);
}

TEST(SharpnessIITest, TutteCoxeterBase) {
  DeficientBipartiteBase base = gamma(named::tutte_coxeter(), 2, 2);
  ConstructionOutput out = build_sharpness_ii(2, 3, base);
  EXPECT_EQ(out.graph.order(), 30);
  EXPECT_EQ(is_regular(out.graph), 3);
  ExtensionResult ext = extend_matching(out.graph, out.matching);
  EXPECT_FALSE(ext.extended());
  EXPECT_FALSE(extends(out.graph, out.matching));
  const auto& [first, second] = out.remainder_sides;
  EXPECT_EQ(second.size(), first.size() + 2);
  EXPECT_TRUE(out.names.count("x_2*"));
  expect_all_pass(out);
}

TEST(SharpnessIITest, Preconditions) {
  EXPECT_THROW(build_sharpness_ii(1, 3, cycle_base(1, 3, 3, 1)), std::invalid_argument);
  EXPECT_THROW(build_sharpness_ii(3, 3, cycle_base(2, 3, 3, 1)), std::invalid_argument);
}

TEST(ConstructionGridTest, GuaranteedRowsHoldEverywhere) {
  for (int r = 3; r <= 5; ++r) {
    for (int m = 2; m <= 3; ++m) {
      for (Family f : {Family::kSharpnessI, Family::kSharpnessLambda, Family::kSharpnessII}) {
        ConstructionOutput out = build_family(f, m, r, 7);
        EXPECT_TRUE(validate_output(out));
        EXPECT_EQ(out.r, r);
        expect_all_pass(guaranteed_only(out));
      }
    }
  }
  for (int k = 2; k <= 4; ++k) {
    expect_all_pass(guaranteed_only(build_family(Family::kLemma3Counterexample, k, 3, 7)));
  }
}

TEST(ConstructionTest, DeterministicPerSeed) {
  for (Family f : {Family::kLemma3Counterexample, Family::kSharpnessI,
                   Family::kSharpnessLambda, Family::kSharpnessII}) {
    ConstructionOutput a = build_family(f, 2, 3, 5);
    ConstructionOutput b = build_family(f, 2, 3, 5);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.matching, b.matching);
    EXPECT_EQ(a.names, b.names);
  }
}

TEST(VerifyExpectationsTest, TamperedAndEmpty) {
  ConstructionOutput out = guaranteed_only(build_family(Family::kSharpnessI, 2, 3, 1));
  EdgeSet edges = out.graph.edges();
  // Drop an edge away from the matching.
  auto victim = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
    return !out.matching.covers(e.u) && !out.matching.covers(e.v);
  });
  ASSERT_NE(victim, edges.end());
  edges.erase(victim);
  ConstructionOutput tampered = out;
  tampered.graph = Graph(out.graph.order(), edges);
  ExpectationReport report = verify_expectations(tampered);
  EXPECT_FALSE(report.ok());
  ASSERT_EQ(report.rows[0].expectation.property, Property::kRegular);
  EXPECT_EQ(report.rows[0].status, RowStatus::kFail);

  // Removing a matching edge makes rows fail without throwing.
  ConstructionOutput broken = out;
  EdgeSet without_m;
  for (const Edge& e : out.graph.edges()) {
    if (e != out.matching.edges()[0]) without_m.push_back(e);
  }
  broken.graph = Graph(out.graph.order(), without_m);
  EXPECT_FALSE(verify_expectations(broken).ok());

  ConstructionOutput empty = out;
  empty.expectations.clear();
  EXPECT_TRUE(verify_expectations(empty).rows.empty());
}

TEST(FamilyNameTest, RoundTrip) {
  for (Family f : {Family::kLemma3Counterexample, Family::kSharpnessI,
                   Family::kSharpnessLambda, Family::kSharpnessII}) {
    EXPECT_EQ(family_from_name(family_name(f)), f);
  }
  EXPECT_FALSE(family_from_name("nope"));
}

}  // namespace
}  // namespace earpack
