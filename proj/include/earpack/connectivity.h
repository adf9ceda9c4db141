#ifndef EARPACK_CONNECTIVITY_H_
#define EARPACK_CONNECTIVITY_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "earpack/graph.h"
#include "earpack/matching.h"

namespace earpack {

/// An edge cut F = E(side_a, side_b) with a cycle on each side.
struct CutCertificate {
  EdgeSet f;
  VertexSet side_a;
  VertexSet side_b;
  std::vector<Vertex> cycle_a;
  std::vector<Vertex> cycle_b;
  bool odd = false;  // cycle_a has odd length

  friend bool operator==(const CutCertificate&, const CutCertificate&) = default;
};

struct ConnectivityValue {
  int value = kInfinity;
  std::optional<CutCertificate> certificate;  // present iff finite

  bool finite() const { return value != kInfinity; }
};

struct SearchBudget {
  std::size_t max_cycles = 1'000'000;
  std::uint64_t max_cycle_pairs = 200'000'000;
  std::uint64_t max_ear_nodes = 5'000'000;
};

/// Thrown when a cap on the cycle enumeration is hit. `upper_bound()` is the
/// best cut value found among the pairs that were examined (or infinity).
class InexactError : public std::runtime_error {
 public:
  InexactError(const std::string& what, int upper_bound)
      : std::runtime_error(what), upper_bound_(upper_bound) {}
  int upper_bound() const { return upper_bound_; }

 private:
  int upper_bound_;
};

/// Minimum cyclic edge cut. Every pair of vertex-disjoint chordless cycles
/// is contracted to a source and sink and separated by a minimum cut; the
/// smallest such cut wins, ties going to the lexicographically smallest F.
ConnectivityValue cyclic_edge_connectivity(const Graph& g,
                                           const SearchBudget& budget = {});

/// As above with the first cycle of each pair restricted to odd length.
/// Infinite for bipartite graphs.
ConnectivityValue odd_cyclic_edge_connectivity(const Graph& g,
                                               const SearchBudget& budget = {});

Verification verify_cut(const Graph& g, const CutCertificate& cert,
                        bool require_odd);

// True when `cycle` is a cycle of g (length >= 3, distinct vertices,
// consecutive and closing vertices adjacent).
bool is_cycle_of(const Graph& g, const std::vector<Vertex>& cycle);

}  // namespace earpack

#endif  // EARPACK_CONNECTIVITY_H_
