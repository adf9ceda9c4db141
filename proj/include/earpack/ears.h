#ifndef EARPACK_EARS_H_
#define EARPACK_EARS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "earpack/graph.h"
#include "earpack/matching.h"

namespace earpack {

enum class EarKind { kPath, kCycle };

/// A path whose two ends (and no other vertex) lie in U, or a cycle meeting
/// U in exactly one vertex. Cycles are stored from their U vertex without
/// repeating it at the end.
struct Ear {
  EarKind kind = EarKind::kPath;
  std::vector<Vertex> vertices;

  int length() const {
    const int n = static_cast<int>(vertices.size());
    return kind == EarKind::kPath ? n - 1 : n;
  }
  bool odd() const { return length() % 2 == 1; }
  EdgeSet edges() const;

  friend bool operator==(const Ear&, const Ear&) = default;
};

struct EarPacking {
  VertexSet u;
  std::vector<Ear> ears;

  int k() const { return static_cast<int>(ears.size()); }
};

/// How a packing search ended.
///   kMaximum       exhaustive; no larger packing exists
///   kTargetReached a packing of at least the requested size was found
///   kImpossible    exhaustive; the requested size cannot be reached
///   kUnknown       the node budget ran out first
enum class SearchOutcome { kMaximum, kTargetReached, kImpossible, kUnknown };

struct PackingResult {
  EarPacking packing;
  SearchOutcome outcome = SearchOutcome::kMaximum;
  std::uint64_t nodes = 0;

  bool exact() const {
    return outcome == SearchOutcome::kMaximum || outcome == SearchOutcome::kImpossible;
  }
};

Verification validate_ear(const Graph& g, const VertexSet& u, const Ear& ear);

// All ears valid for `p.u`, all odd, pairwise edge-disjoint.
Verification verify_packing(const Graph& g, const EarPacking& p);

/// Largest set of edge-disjoint odd ears of U.
///
/// Bipartite hosts are solved exactly by a flow between the two colour
/// classes of U. Other graphs go through a depth-first branch and bound
/// that picks the lowest available edge at U and tries every odd ear
/// through it (shortest first) before discarding the edge. With a target
/// the search stops once that many ears are packed. `max_nodes` bounds the
/// number of search steps. Throws std::invalid_argument for an empty U or
/// a vertex outside the graph.
PackingResult max_odd_ear_packing(const Graph& g, const VertexSet& u,
                                  std::optional<int> target = std::nullopt,
                                  std::uint64_t max_nodes = 5'000'000);

/// Edge-disjoint (M_B, M_W)-paths from a unit-capacity flow, each cut down
/// to a segment between consecutive vertices of V(M) so that it is an ear.
/// Throws std::domain_error if g is not bipartite.
EarPacking bipartite_ear_packing(const Graph& g, const Matching& m);

std::string_view outcome_name(SearchOutcome outcome);

}  // namespace earpack

#endif  // EARPACK_EARS_H_
