#include "earpack/connectivity.h"

#include <algorithm>
#include <string>

#include "earpack/flow.h"

namespace earpack {
namespace {

class VertexMask {
 public:
  VertexMask(int order, const std::vector<Vertex>& vertices)
      : words_((order + 63) / 64, 0) {
    for (Vertex v : vertices) words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  bool disjoint(const VertexMask& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Search {
  int best = kInfinity;
  std::optional<CutCertificate> certificate;
  std::uint64_t pairs = 0;
};

void consider_pair(const Graph& g, const std::vector<Vertex>& c1,
                   const std::vector<Vertex>& c2, bool c1_odd, Search& search) {
  const int limit =
      search.best == kInfinity ? FlowNetwork::kUnbounded : search.best + 1;
  MinCut cut = min_cut_between(g, normalize(c1), normalize(c2), limit);
  if (cut.size >= limit) return;
  if (cut.size == search.best && search.certificate &&
      !(cut.edges < search.certificate->f)) {
    return;
  }
  CutCertificate cert;
  cert.f = std::move(cut.edges);
  cert.side_b = complement(g.order(), cut.source_side);
  cert.side_a = std::move(cut.source_side);
  cert.cycle_a = c1;
  cert.cycle_b = c2;
  cert.odd = c1_odd;
  search.best = cut.size;
  search.certificate = std::move(cert);
}

ConnectivityValue run(const Graph& g, const SearchBudget& budget, bool odd_only) {
  ConnectivityValue result;
  if (odd_only && bipartition(g)) return result;

  CycleList list = chordless_cycles(g, g.order(), budget.max_cycles);
  const std::size_t count = list.cycles.size();
  std::vector<VertexMask> masks;
  masks.reserve(count);
  for (const auto& c : list.cycles) masks.emplace_back(g.order(), c);

  Search search;
  // Seed the bound with the boundary of a cycle that has a disjoint partner;
  // the flow for that pair can only match or improve it.
  for (std::size_t i = 0; i < count && search.best == kInfinity; ++i) {
    if (odd_only && !list.odd[i]) continue;
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && masks[i].disjoint(masks[j])) {
        search.best = static_cast<int>(
            boundary_edges(g, normalize(list.cycles[i])).size());
        break;
      }
    }
  }

  bool capped = false;
  for (std::size_t i = 0; i < count && !capped; ++i) {
    if (odd_only && !list.odd[i]) continue;
    for (std::size_t j = odd_only ? 0 : i + 1; j < count; ++j) {
      if (i == j || !masks[i].disjoint(masks[j])) continue;
      // Both odd: the pair was already handled with the roles swapped.
      if (odd_only && list.odd[j] && j < i) continue;
      if (++search.pairs > budget.max_cycle_pairs) {
        capped = true;
        break;
      }
      consider_pair(g, list.cycles[i], list.cycles[j], list.odd[i], search);
    }
  }
  if (list.truncated || capped) {
    throw InexactError(
        std::string(list.truncated ? "chordless cycle cap" : "cycle pair cap") +
            " exceeded; best cut found " +
            (search.best == kInfinity ? std::string("none")
                                      : std::to_string(search.best)),
        search.best);
  }
  if (search.certificate) {
    result.value = search.best;
    result.certificate = std::move(search.certificate);
  }
  return result;
}

bool contains_all(const VertexSet& set, const std::vector<Vertex>& items) {
  return std::all_of(items.begin(), items.end(), [&](Vertex v) {
    return std::binary_search(set.begin(), set.end(), v);
  });
}

}  // namespace

bool is_cycle_of(const Graph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) return false;
  for (Vertex v : cycle) {
    if (!g.is_vertex(v)) return false;
  }
  if (normalize(cycle).size() != cycle.size()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

ConnectivityValue cyclic_edge_connectivity(const Graph& g, const SearchBudget& budget) {
  return run(g, budget, false);
}

ConnectivityValue odd_cyclic_edge_connectivity(const Graph& g,
                                               const SearchBudget& budget) {
  return run(g, budget, true);
}

Verification verify_cut(const Graph& g, const CutCertificate& cert, bool require_odd) {
  if (normalize(cert.side_a) != cert.side_a || normalize(cert.side_b) != cert.side_b) {
    return Verification::fail("sides-not-normalized");
  }
  VertexSet all = cert.side_a;
  all.insert(all.end(), cert.side_b.begin(), cert.side_b.end());
  all = normalize(std::move(all));
  if (all.size() != cert.side_a.size() + cert.side_b.size() ||
      static_cast<int>(all.size()) != g.order() ||
      (!all.empty() && (all.front() != 0 || all.back() != g.order() - 1))) {
    return Verification::fail("sides-not-partition");
  }
  if (normalize(cert.f) != cert.f) return Verification::fail("cut-not-normalized");
  if (cert.f != boundary_edges(g, cert.side_a)) return Verification::fail("cut-mismatch");
  if (!is_cycle_of(g, cert.cycle_a)) return Verification::fail("cycle-a-invalid");
  if (!is_cycle_of(g, cert.cycle_b)) return Verification::fail("cycle-b-invalid");
  if (!contains_all(cert.side_a, cert.cycle_a)) {
    return Verification::fail("cycle-a-crosses-cut");
  }
  if (!contains_all(cert.side_b, cert.cycle_b)) {
    return Verification::fail("cycle-b-crosses-cut");
  }
  const bool odd_cycle = cert.cycle_a.size() % 2 == 1;
  if (cert.odd != odd_cycle) return Verification::fail("odd-flag-mismatch");
  if (require_odd && !cert.odd) return Verification::fail("cycle-a-not-odd");
  return Verification::pass();
}

}  // namespace earpack
