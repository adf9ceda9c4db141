#ifndef EARPACK_CONSTRUCTIONS_H_
#define EARPACK_CONSTRUCTIONS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "earpack/connectivity.h"
#include "earpack/graph.h"
#include "earpack/matching.h"

namespace earpack {

struct BaseMeasurements {
  int girth = kInfinity;
  // Smallest distance between two distinct deficient vertices.
  int separation = kInfinity;
  // Absent when the connectivity search ran out of budget.
  std::optional<int> lambda_c;
  int lambda_c_upper_bound = kInfinity;
};

/// An r-regular bipartite graph with ell edges removed. The i-th entries of
/// the two deficiency lists are the vertices called x_i (colour class B)
/// and y_i (class W). When `linkage` is non-empty, linkage[i] is a path of
/// the graph from x_i to y_i, and these paths are pairwise vertex-disjoint.
struct DeficientBipartiteBase {
  Graph graph;
  std::vector<Vertex> side_b_deficient;
  std::vector<Vertex> side_w_deficient;
  int r = 0;
  std::vector<std::vector<Vertex>> linkage;
  BaseMeasurements measured;

  int ell() const { return static_cast<int>(side_b_deficient.size()); }
};

// Degree pattern, colour classes and (if present) the linkage paths.
Verification validate_base(const DeficientBipartiteBase& base);

// Fills `measured`. The connectivity value is left empty when the search
// exceeds `budget`.
void measure_base(DeficientBipartiteBase& base, const SearchBudget& budget);

/// An r-regular bipartite graph of girth at least `min_girth`.
///
/// Fixtures: K_{r,r} up to girth 4, the Heawood and Tutte-Coxeter graphs
/// for r = 3, and point-line incidence graphs of PG(2, r-1) for r = 4..6 up
/// to girth 6. Otherwise a random bipartite r-regular graph is improved by
/// edge swaps; the attempt is abandoned once the order would pass
/// `max_order` or `max_swaps` swaps have been tried at every order.
std::optional<Graph> base_catalog(int r, int min_girth, std::uint64_t seed = 1,
                                  int max_order = 200, int max_swaps = 4000);

/// Removes `ell` edges spread around a shortest cycle of `base`, pairwise
/// at distance at least d + 1. Requires an r-regular bipartite base with
/// girth(base) >= ell * (d + 2); throws std::invalid_argument otherwise.
///
/// When the cycle admits an even spacing, the stretches of the cycle between
/// consecutive removed edges become the linkage paths.
DeficientBipartiteBase gamma(const Graph& base, int ell, int d,
                             const SearchBudget& budget = {});

/// A desk-scale stand-in for a large-girth base: a Hamiltonian cycle on
/// 2h vertices plus r - 2 random perfect matchings between its even and odd
/// positions, with `ell` cycle edges removed. Removed edges are picked in
/// cycle order so that all deficient vertices lie at pairwise distance at
/// least `separation`; h grows until that succeeds. Linkage paths are the
/// stretches of the Hamiltonian cycle between removed edges. The result
/// depends only on the arguments. Throws GenerationError if no base up to
/// 2 * `max_half_order` vertices works.
DeficientBipartiteBase cycle_base(int ell, int r, int separation, std::uint64_t seed,
                                  int max_half_order = 2000);

// ---------------------------------------------------------------------------
// Expectations attached to a construction.

enum class Basis { kGuaranteed, kPaperAsymptotic };

enum class Property {
  kRegular,              // is_regular == predicted
  kEvenOrder,            // order is even (predicted 1)
  kBipartite,            // bipartite iff predicted == 1
  kMatchingSize,         // |M| == predicted
  kDistanceMatching,     // M is a distance-`predicted` matching
  kBlocked,              // M does not extend (predicted 1)
  kBarrier,              // the designated S passes verify_barrier
  kComponents,           // components of G - V(M) - S are `expected_components`
  kUnbalancedRemainder,  // G - V(M) is bipartite along `remainder_sides` with the
                         // given surplus of the second side
  kCutSize,              // |E(cut_side, rest)| == predicted
  kOddEarsAtMost,        // maximum odd-ear packing of V(M) <= predicted
  kOddEarsAtLeast,       // some odd-ear packing of V(M) reaches predicted
  kLambdaCAtLeast,       // lambda_c >= predicted
};

struct Expectation {
  Property property = Property::kRegular;
  long long predicted = 0;
  Basis basis = Basis::kGuaranteed;
};

struct ConstructionOutput {
  std::string family;
  std::map<std::string, long long> parameters;
  int r = 0;
  Graph graph;
  Matching matching;
  std::map<std::string, Vertex> names;  // role label -> vertex
  std::vector<Expectation> expectations;

  VertexSet barrier_s;
  std::vector<VertexSet> expected_components;
  std::pair<VertexSet, VertexSet> remainder_sides;
  VertexSet cut_side;
};

// Labels are distinct by construction of std::map; this also checks that no
// two labels share a vertex and that M is a matching of the graph.
Verification validate_output(const ConstructionOutput& out);

/// The cubic bipartite graph in which a distance-4 matching of size 2k + 1
/// has no more than 5k + 4 edge-disjoint odd ears. `base` must have r = 3
/// and exactly 4k + 2 deficient vertices per side at pairwise distance at
/// least 3. Throws std::invalid_argument for k < 2 or a mismatched base.
ConstructionOutput build_lemma3_counterexample(int k, const DeficientBipartiteBase& base);

/// r-regular graph with a non-extendable matching of size m whose remainder,
/// after deleting one colour class S of H1, is |S| + 1 isolated vertices and
/// H2. Bases need alpha + ceil(r/2) and alpha deficiencies (alpha = m(r-1))
/// and linkage paths.
ConstructionOutput build_sharpness_i(int m, int r, const DeficientBipartiteBase& base1,
                                     const DeficientBipartiteBase& base2);

/// r-regular graph with a non-extendable matching of size m for which
/// G - V(M) is two odd components H1 and H2. With rho = ceil((m+1)(r-1)/2),
/// base1 needs rho deficiencies and base2 needs rho (m and r both even) or
/// rho + 1 (otherwise).
ConstructionOutput build_sharpness_lambda(int m, int r, const DeficientBipartiteBase& base1,
                                          const DeficientBipartiteBase& base2);

/// r-regular graph A + x1x2 + y1y2 + {x_i y_i : i >= 3} with the matching
/// {x1x2, y2x2*} + {x_i y_i : i >= 3}, whose removal leaves an unbalanced
/// bipartite graph. `base` needs exactly m deficiencies per side.
ConstructionOutput build_sharpness_ii(int m, int r, const DeficientBipartiteBase& base);

// ---------------------------------------------------------------------------
// Families built end to end on cycle bases.

enum class Family { kLemma3Counterexample, kSharpnessI, kSharpnessLambda, kSharpnessII };

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// Builds `family` with parameter `size` (k for the counterexample, m for the
/// others) on freshly generated cycle bases.
ConstructionOutput build_family(Family family, int size, int r, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Verification.

enum class RowStatus { kPass, kFail, kReported };

struct ExpectationRow {
  Expectation expectation;
  std::string measured;
  RowStatus status = RowStatus::kReported;
  // For reported rows: whether the measured value happens to meet the
  // prediction, when that is known.
  std::optional<bool> holds;
};

struct ExpectationReport {
  std::vector<ExpectationRow> rows;

  bool ok() const;
};

struct VerifyOptions {
  SearchBudget budget{20'000, 300'000, 2'000'000};
};

/// Evaluates every expectation. Guaranteed rows pass or fail; asymptotic
/// rows are reported with the measured value. Never throws: a library error
/// while evaluating a row fails that row.
ExpectationReport verify_expectations(const ConstructionOutput& out,
                                      const VerifyOptions& options = {});

std::string_view property_name(Property property);
std::string_view basis_name(Basis basis);
std::string_view status_name(RowStatus status);

}  // namespace earpack

#endif  // EARPACK_CONSTRUCTIONS_H_
