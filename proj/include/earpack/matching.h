#ifndef EARPACK_MATCHING_H_
#define EARPACK_MATCHING_H_

#include <optional>
#include <string>
#include <vector>

#include "earpack/graph.h"

namespace earpack {

// Outcome of a certificate check; `reason` names the first failed condition.
struct Verification {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Verification pass() { return {}; }
  static Verification fail(std::string why) { return {false, std::move(why)}; }
};

/// A set of pairwise vertex-disjoint edges with its covered vertex set V(M).
class Matching {
 public:
  Matching() = default;
  // Throws std::invalid_argument if two edges share a vertex.
  explicit Matching(EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  const VertexSet& covered() const { return covered_; }
  bool covers(Vertex v) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  EdgeSet edges_;
  VertexSet covered_;
};

// Throws std::invalid_argument unless every edge of `m` belongs to `g`.
void require_matching_of(const Graph& g, const Matching& m);

// Blossom algorithm, lowest-index-first scanning.
Matching maximum_matching(const Graph& g);

/// Gallai-Edmonds decomposition: D holds the vertices missed by some maximum
/// matching, A = N(D) \ D, C the rest.
struct GallaiEdmonds {
  VertexSet d;
  VertexSet a;
  VertexSet c;
  Matching matching;  // the maximum matching the decomposition was read from
};
GallaiEdmonds gallai_edmonds(const Graph& g);

/// Barrier S for a matching M, together with the bookkeeping of the
/// component structure of T = G - V(M) - S.
struct BarrierCertificate {
  VertexSet s;
  std::vector<VertexSet> all_components;  // ordered by smallest vertex
  std::vector<VertexSet> odd_components;
  int m_star = 0;  // |E(V(M), V(M))| - m
  int mu = 0;      // |E(S, S)| + |E(S, V(M))|
  int q1 = 0;      // bipartite odd components
  int q2 = 0;      // non-bipartite odd components

  int size_s() const { return static_cast<int>(s.size()); }
};

// Fills in every derived field for a given S. Throws std::invalid_argument
// if S meets V(M) or leaves the vertex range.
BarrierCertificate make_barrier_certificate(const Graph& g, const Matching& m,
                                            const VertexSet& s);

Verification verify_barrier(const Graph& g, const Matching& m,
                            const BarrierCertificate& cert);

enum class ExtensionOutcome { kExtended, kBlocked };

struct ExtensionResult {
  ExtensionOutcome outcome = ExtensionOutcome::kExtended;
  std::optional<Matching> perfect_matching;
  std::optional<BarrierCertificate> barrier;

  bool extended() const { return outcome == ExtensionOutcome::kExtended; }
};

/// Extends M to a perfect matching of g or returns a Tutte barrier taken
/// from the Gallai-Edmonds set A of G - V(M). Throws std::domain_error for
/// odd order and std::invalid_argument when M is not a matching of g.
ExtensionResult extend_matching(const Graph& g, const Matching& m);

bool is_distance_d_matching(const Graph& g, const Matching& m, int d);

// Lowest-indexed vertex outside V(M) with at least r - 1 neighbors in V(M).
std::optional<Vertex> heavy_neighbor_exists(const Graph& g, const Matching& m,
                                            int r);

/// Both sides of the edge count |E(T, T-bar)| = s r + 2(m r - m - m* - mu)
/// for T = G - V(M) - S. `lhs` is counted edge by edge, `rhs` from the
/// formula. Throws std::domain_error when g is not regular.
struct Eq1Sides {
  long long lhs = 0;
  long long rhs = 0;
  int s = 0;
  int m_star = 0;
  int mu = 0;
};
Eq1Sides eq1_sides(const Graph& g, const Matching& m, const VertexSet& s);

}  // namespace earpack

#endif  // EARPACK_MATCHING_H_
