#ifndef EARPACK_HARNESS_H_
#define EARPACK_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "earpack/connectivity.h"
#include "earpack/ears.h"
#include "earpack/graph.h"
#include "earpack/matching.h"

namespace earpack {

/// A connectivity value that may be unknown. When the search exceeded its
/// budget `value` is empty and `upper_bound` holds the best cut seen.
struct ConnectivityEstimate {
  std::optional<ConnectivityValue> value;
  int upper_bound = kInfinity;

  bool known() const { return value.has_value(); }
  // True only when the value is known and at least `bound`.
  bool at_least(long long bound) const;
};

ConnectivityEstimate estimate_lambda_c(const Graph& g, const SearchBudget& budget);
ConnectivityEstimate estimate_lambda_oc(const Graph& g, const SearchBudget& budget);

struct GraphConnectivity {
  ConnectivityEstimate lambda_c;
  ConnectivityEstimate lambda_oc;
};

GraphConnectivity measure_connectivity(const Graph& g, const SearchBudget& budget);

struct HarnessBudget {
  SearchBudget search;
  // Node budget of the informational ear search run when neither
  // connectivity condition holds.
  std::uint64_t report_ear_nodes = 20'000;
};

struct HypothesisReport {
  int r = 0;
  int m = 0;
  bool even_order = false;
  bool distance3 = false;
  std::optional<Vertex> heavy_neighbor;

  int k_found = 0;
  bool k_exact = false;  // the last ear search was exhaustive
  SearchOutcome k_outcome = SearchOutcome::kUnknown;
  std::optional<EarPacking> packing;  // the largest packing found

  ConnectivityEstimate lambda_c;
  ConnectivityEstimate lambda_oc;
  int theta = 0;

  bool case_i = false;
  bool case_ii = false;

  long long ears_needed_i() const;
  long long ears_needed_ii() const;
  long long lambda_c_needed() const;
  long long lambda_oc_needed() const;
  // The m >= r clause: no vertex outside V(M) with r - 1 neighbors in V(M).
  bool side_condition() const;
  bool hypothesis_met() const;
};

// Case flags recomputed from the stored fields.
bool recompute_case_i(const HypothesisReport& report);
bool recompute_case_ii(const HypothesisReport& report);

/// Computes every field of the report. Ears are searched in target mode,
/// first for the case (i) threshold and then for case (ii) if needed; the
/// search for a case is skipped when its connectivity condition fails, in
/// which case a small informational search fills k_found. Unknown
/// quantities leave the corresponding case flag false.
///
/// Throws std::domain_error when g is not regular, r < 3 or |M| < 2, and
/// std::invalid_argument when M is not a matching of g. `connectivity`
/// may carry precomputed values for g.
HypothesisReport evaluate_hypotheses(const Graph& g, const Matching& m,
                                     const HarnessBudget& budget = {},
                                     const GraphConnectivity* connectivity = nullptr);

struct TheoremVerdict {
  HypothesisReport report;
  bool hypothesis_met = false;
  ExtensionResult extension;
  bool consistent = true;
};

/// Runs evaluate_hypotheses and extend_matching. A single-edge M is
/// accepted: its report carries only the structural fields and the
/// hypothesis is never met. Also throws std::domain_error for odd order or
/// an empty M.
TheoremVerdict check_theorem(const Graph& g, const Matching& m,
                             const HarnessBudget& budget = {},
                             const GraphConnectivity* connectivity = nullptr);

struct Lemma10Result {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

/// |E(T, T-bar)| against r|L|. Throws std::domain_error naming the first
/// failed precondition: "not regular", "not connected", "(r-2)(d-2) < 4",
/// "T is not an induced tree", "L is not a subset of T",
/// "L is not a distance-d set".
Lemma10Result lemma10_check(const Graph& g, const VertexSet& t, const VertexSet& l, int d);

// ---------------------------------------------------------------------------
// Claim-level rows for a blocked matching.

struct ClaimRow {
  std::string name;
  int component = -1;  // index into cert.all_components, -1 for global rows
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
  bool asserted = false;
};

struct ClaimReport {
  bool hypotheses_met = false;
  std::vector<ClaimRow> rows;
  int f_size = -1;  // -1 without a packing

  // No asserted row fails.
  bool ok() const;
};

/// Rows, with T = G - V(M) - S:
///   "eq1"          |E(T, T-bar)| from edges vs formula; always asserted.
///   "odd-boundary" per odd component, |E(D, D-bar)| >= r.
///   "cycle-outside" per component with a cycle, G - V(D) has a cycle
///                  (lhs 1 if so, rhs 1).
///   "non-bipartite-odd" q2 <= 1.
///   The three above are asserted only when `hypotheses_met`.
/// With a packing of odd ears of V(M), F picks one edge of an odd maximal
/// T-segment from every ear that avoids E(V(M),V(M)), E(S,V(M)), E(S,S):
///   "f-count"      |F| >= k - m - m* - mu
///   "f-boundary"   per component, |E(D, D-bar)| >= 2|E(D) & F|, plus r
///                  for bipartite odd components
///   "t-boundary"   |E(T, T-bar)| >= 2|F| + q1 r
/// These hold in every regular graph and are always asserted.
/// Throws std::domain_error when g is not regular.
ClaimReport claim_invariants(const Graph& g, const Matching& m,
                             const BarrierCertificate& cert, bool hypotheses_met,
                             const std::optional<EarPacking>& packing = std::nullopt);

// ---------------------------------------------------------------------------
// Falsification sweep.

struct SweepParams {
  int n_min = 8;
  int n_max = 14;
  std::vector<int> degrees{3};
  int samples = 100;
  std::uint64_t seed = 1;
  HarnessBudget budget{SearchBudget{50'000, 2'000'000, 200'000}, 20'000};
  int matching_cap = 200;
  // Also try to extend every single edge. The theorem says nothing about
  // these; blocked single edges are counted, not failed.
  bool include_single_edges = false;
  // Sample bipartite regular graphs (pairing model on two sides) instead.
  bool bipartite_only = false;
  std::string bundle_dir;  // empty: bundles are not written to disk
};

struct SweepSummary {
  long long samples = 0;
  long long matchings = 0;
  long long hypothesis_met = 0;
  long long consistent = 0;
  long long inconsistent = 0;
  long long case_i = 0;
  long long case_ii = 0;
  long long capped_graphs = 0;  // graphs whose matching list hit the cap
  long long single_edges = 0;   // with include_single_edges
  long long single_edges_blocked = 0;
  long long lemma3_checked = 0;
  long long lemma3_violations = 0;
  std::vector<std::string> bundles;  // one per inconsistent instance
  std::vector<std::string> errors;   // generation failures, by sample

  bool ok() const { return inconsistent == 0 && lemma3_violations == 0; }
};

/// Distance-3 matchings of g with at least `min_size` edges, depth-first
/// over an edge order shuffled by `seed`, stopping after `cap` matchings.
std::vector<Matching> distance3_matchings(const Graph& g, int min_size, int cap,
                                          std::uint64_t seed);

/// Samples random regular graphs of even order in [n_min, n_max] with the
/// listed degrees and runs check_theorem on every enumerated matching.
/// Bipartite samples also check that bipartite_ear_packing reaches
/// min(lambda_c, m r) for matchings of distance d >= 3 with (r, d) not
/// (3, 3) or (3, 4).
SweepSummary falsification_sweep(const SweepParams& params);

}  // namespace earpack

#endif  // EARPACK_HARNESS_H_
