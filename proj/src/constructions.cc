#include "earpack/constructions.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "earpack/ears.h"
#include "earpack/flow.h"
#include "earpack/generators.h"
#include "earpack/named_graphs.h"
#include "earpack/random.h"

namespace earpack {

namespace {

int ceil_half(int x) { return (x + 1) / 2; }
int floor_half(int x) { return x / 2; }

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

std::string label(std::string_view stem, int index) {
  return std::string(stem) + "_" + std::to_string(index);
}

int deficient_separation(const Graph& g, const std::vector<Vertex>& deficient) {
  int best = kInfinity;
  for (std::size_t i = 0; i < deficient.size(); ++i) {
    std::vector<int> dist = distances_from(g, deficient[i]);
    for (std::size_t j = i + 1; j < deficient.size(); ++j) {
      best = std::min(best, dist[deficient[j]]);
    }
  }
  return best;
}

std::vector<Vertex> all_deficient(const DeficientBipartiteBase& base) {
  std::vector<Vertex> all = base.side_b_deficient;
  all.insert(all.end(), base.side_w_deficient.begin(), base.side_w_deficient.end());
  return all;
}

// Deletes the cycle edges (cycle[s], cycle[s+1]) for s in `starts`. With
// all gaps even, the stretches between removed edges become linkage paths.
DeficientBipartiteBase remove_cycle_edges(const Graph& g, int r,
                                          const std::vector<Vertex>& cycle,
                                          const std::vector<int>& starts) {
  const int len = static_cast<int>(cycle.size());
  const int ell = static_cast<int>(starts.size());
  auto parts = bipartition(g);
  if (!parts) throw std::invalid_argument("base is not bipartite");
  auto black = [&](Vertex v) { return contains(parts->black, v); };

  EdgeSet removed;
  for (int s : starts) removed.push_back(make_edge(cycle[s], cycle[(s + 1) % len]));
  removed = normalize(removed);
  const EdgeSet all = g.edges();
  EdgeSet kept;
  std::set_difference(all.begin(), all.end(), removed.begin(), removed.end(),
                      std::back_inserter(kept));

  DeficientBipartiteBase base;
  base.graph = Graph(g.order(), kept);
  base.r = r;
  bool even_gaps = true;
  for (int i = 0; i < ell; ++i) {
    int next = i + 1 < ell ? starts[i + 1] : starts[0] + len;
    if ((next - starts[i]) % 2 != 0) even_gaps = false;
  }
  if (even_gaps) {
    for (int i = 0; i < ell; ++i) {
      int next = i + 1 < ell ? starts[i + 1] : starts[0] + len;
      std::vector<Vertex> stretch;
      for (int p = starts[i] + 1; p <= next; ++p) stretch.push_back(cycle[p % len]);
      if (!black(stretch.front())) std::reverse(stretch.begin(), stretch.end());
      base.side_b_deficient.push_back(stretch.front());
      base.side_w_deficient.push_back(stretch.back());
      base.linkage.push_back(std::move(stretch));
    }
  } else {
    for (int s : starts) {
      Vertex a = cycle[s], b = cycle[(s + 1) % len];
      if (!black(a)) std::swap(a, b);
      base.side_b_deficient.push_back(a);
      base.side_w_deficient.push_back(b);
    }
  }
  return base;
}

// Vertices lying on a cycle shorter than `girth`, counted by a depth-limited
// breadth-first search from each vertex.
int short_cycle_vertices(const std::vector<std::vector<int>>& adj, int girth) {
  const int n = static_cast<int>(adj.size());
  int count = 0;
  std::vector<int> dist(n), branch(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    std::deque<int> queue;
    for (int w : adj[root]) {
      dist[w] = 1;
      branch[w] = w;
      queue.push_back(w);
    }
    bool bad = false;
    while (!queue.empty() && !bad) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (w == root) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          branch[w] = branch[v];
          if (2 * dist[w] < girth) queue.push_back(w);
        } else if (branch[w] != branch[v] && dist[v] + dist[w] + 1 < girth) {
          bad = true;
          break;
        }
      }
    }
    if (bad) ++count;
  }
  return count;
}

// Random bipartite r-regular graph on h + h vertices improved by edge swaps
// until its girth reaches `girth`; black vertices are 0..h-1.
std::optional<Graph> swap_to_girth(int h, int r, int girth, std::uint64_t seed,
                                   int max_swaps) {
  Rng rng(seed);
  std::vector<std::vector<bool>> adj_matrix(h, std::vector<bool>(h, false));
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < r; ++t) {
    std::vector<int> perm(h);
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
      placed = true;
      for (int b = 0; b < h; ++b) {
        if (adj_matrix[b][perm[b]]) {
          placed = false;
          break;
        }
      }
    }
    if (!placed) return std::nullopt;
    for (int b = 0; b < h; ++b) {
      adj_matrix[b][perm[b]] = true;
      edges.push_back({b, perm[b]});
    }
  }
  auto adjacency = [&]() {
    std::vector<std::vector<int>> adj(2 * h);
    for (auto [b, w] : edges) {
      adj[b].push_back(h + w);
      adj[h + w].push_back(b);
    }
    return adj;
  };
  int bad = short_cycle_vertices(adjacency(), girth);
  for (int step = 0; step < max_swaps && bad > 0; ++step) {
    std::size_t i = rng.below(edges.size());
    std::size_t j = rng.below(edges.size());
    auto [b1, w1] = edges[i];
    auto [b2, w2] = edges[j];
    if (b1 == b2 || w1 == w2 || adj_matrix[b1][w2] || adj_matrix[b2][w1]) continue;
    auto apply = [&](int from_w1, int from_w2) {
      adj_matrix[b1][from_w1] = false;
      adj_matrix[b2][from_w2] = false;
      adj_matrix[b1][from_w2] = true;
      adj_matrix[b2][from_w1] = true;
      edges[i].second = from_w2;
      edges[j].second = from_w1;
    };
    apply(w1, w2);
    int now = short_cycle_vertices(adjacency(), girth);
    if (now <= bad) {
      bad = now;
    } else {
      apply(w2, w1);
    }
  }
  if (bad > 0) return std::nullopt;
  std::vector<Edge> out;
  for (auto [b, w] : edges) out.push_back(make_edge(b, h + w));
  Graph g(2 * h, normalize(out));
  if (girth > 0 && earpack::girth(g) < girth) return std::nullopt;
  return g;
}

// Smallest possible half-order of an r-regular bipartite graph of the
// given girth.
long long bipartite_moore_half(int r, int girth) {
  const int t = (girth + 1) / 2;  // cycles have length 2t or more
  long long total = 0, power = 1;
  for (int i = 0; i < t; ++i) {
    total += power;
    power *= (r - 1);
    if (total > (1LL << 40)) break;
  }
  return total;
}

class Assembler {
 public:
  int add_block(const Graph& g) {
    const int offset = order_;
    order_ += g.order();
    for (const Edge& e : g.edges()) edges_.push_back({e.u + offset, e.v + offset});
    return offset;
  }

  Vertex add_vertex(const std::string& name) {
    Vertex v = order_++;
    names_[name] = v;
    return v;
  }

  void add_edge(Vertex a, Vertex b) { edges_.push_back(make_edge(a, b)); }
  void name(const std::string& label, Vertex v) { names_[label] = v; }
  int order() const { return order_; }

  Graph finish() const { return Graph(order_, normalize(edges_)); }
  std::map<std::string, Vertex> names() const { return names_; }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::map<std::string, Vertex> names_;
};

// Hands out vertices from a list in order.
class Pool {
 public:
  explicit Pool(std::vector<Vertex> items) : items_(std::move(items)) {}

  void join(Assembler& out, Vertex target, int count) {
    for (int i = 0; i < count; ++i) {
      if (next_ >= items_.size()) throw std::logic_error("join rule exhausted a vertex pool");
      out.add_edge(target, items_[next_++]);
    }
  }

  bool exhausted() const { return next_ == items_.size(); }

 private:
  std::vector<Vertex> items_;
  std::size_t next_ = 0;
};

void require_base(const DeficientBipartiteBase& base, int r, int ell, bool linkage,
                  const char* which) {
  const std::string tag(which);
  if (base.r != r) throw std::invalid_argument(tag + ": base degree differs from r");
  if (base.ell() != ell) {
    throw std::invalid_argument(tag + ": base has " + std::to_string(base.ell()) +
                                " deficiencies per side, expected " + std::to_string(ell));
  }
  Verification v = validate_base(base);
  if (!v) throw std::invalid_argument(tag + ": invalid base (" + v.reason + ")");
  if (linkage) {
    if (base.linkage.empty()) throw std::invalid_argument(tag + ": base lacks linkage paths");
    VertexSet x = normalize(base.side_b_deficient);
    VertexSet y = normalize(base.side_w_deficient);
    if (vertex_disjoint_paths(base.graph, x, y) < ell) {
      throw std::invalid_argument(tag + ": deficient sides are not linked");
    }
  }
}

std::vector<Vertex> shifted(const std::vector<Vertex>& vs, int offset) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(v + offset);
  return out;
}

void name_all(Assembler& out, std::string_view stem, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out.name(label(stem, static_cast<int>(i) + 1), vs[i]);
  }
}

VertexSet block_vertices(int offset, int count) {
  VertexSet out(count);
  std::iota(out.begin(), out.end(), offset);
  return out;
}

Expectation guaranteed(Property p, long long predicted) {
  return {p, predicted, Basis::kGuaranteed};
}

Expectation asymptotic(Property p, long long predicted) {
  return {p, predicted, Basis::kPaperAsymptotic};
}

}  // namespace

// ---------------------------------------------------------------------------
// Bases.

Verification validate_base(const DeficientBipartiteBase& base) {
  const Graph& g = base.graph;
  const int ell = base.ell();
  if (static_cast<int>(base.side_w_deficient.size()) != ell) {
    return Verification::fail("deficiency-count-mismatch");
  }
  std::vector<Vertex> all = all_deficient(base);
  for (Vertex v : all) {
    if (!g.is_vertex(v)) return Verification::fail("vertex-out-of-range");
  }
  VertexSet listed = normalize(all);
  if (listed.size() != all.size()) return Verification::fail("repeated-deficient-vertex");
  for (Vertex v = 0; v < g.order(); ++v) {
    const int want = contains(listed, v) ? base.r - 1 : base.r;
    if (g.degree(v) != want) return Verification::fail("degree-mismatch");
  }
  auto parts = bipartition(g);
  if (!parts) return Verification::fail("not-bipartite");
  if (!is_connected(g)) return Verification::fail("disconnected");
  for (Vertex x : base.side_b_deficient) {
    if (!contains(parts->black, x)) return Verification::fail("colour-class-mismatch");
  }
  for (Vertex y : base.side_w_deficient) {
    if (!contains(parts->white, y)) return Verification::fail("colour-class-mismatch");
  }
  if (base.linkage.empty()) return Verification::pass();
  if (static_cast<int>(base.linkage.size()) != ell) return Verification::fail("linkage-invalid");
  std::vector<bool> used(g.order(), false);
  for (int i = 0; i < ell; ++i) {
    const auto& path = base.linkage[i];
    if (path.empty() || path.front() != base.side_b_deficient[i] ||
        path.back() != base.side_w_deficient[i]) {
      return Verification::fail("linkage-invalid");
    }
    for (std::size_t j = 0; j < path.size(); ++j) {
      if (!g.is_vertex(path[j])) return Verification::fail("linkage-invalid");
      if (j > 0 && !g.has_edge(path[j - 1], path[j])) {
        return Verification::fail("linkage-invalid");
      }
      if (used[path[j]]) return Verification::fail("linkage-overlap");
      used[path[j]] = true;
    }
  }
  return Verification::pass();
}

void measure_base(DeficientBipartiteBase& base, const SearchBudget& budget) {
  base.measured.girth = girth(base.graph);
  base.measured.separation = deficient_separation(base.graph, all_deficient(base));
  try {
    ConnectivityValue v = cyclic_edge_connectivity(base.graph, budget);
    base.measured.lambda_c = v.value;
    base.measured.lambda_c_upper_bound = v.value;
  } catch (const InexactError& e) {
    base.measured.lambda_c.reset();
    base.measured.lambda_c_upper_bound = e.upper_bound();
  }
}

std::optional<Graph> base_catalog(int r, int min_girth, std::uint64_t seed, int max_order,
                                  int max_swaps) {
  if (r < 3) throw std::invalid_argument("base_catalog needs r >= 3");
  if (min_girth <= 4) return named::complete_bipartite(r, r);
  if (r == 3 && min_girth <= 6) return named::heawood();
  if (r == 3 && min_girth <= 8) return named::tutte_coxeter();
  if (r >= 4 && r <= 6 && min_girth <= 6) {
    if (auto plane = named::projective_plane_incidence(r - 1)) return plane;
  }
  const long long moore = bipartite_moore_half(r, min_girth);
  for (long long h = std::max<long long>(moore, r + 1); 2 * h <= max_order;
       h += std::max<long long>(1, h / 4)) {
    auto g = swap_to_girth(static_cast<int>(h), r, min_girth,
                           derive_seed(seed, static_cast<std::uint64_t>(h)), max_swaps);
    if (g) return g;
  }
  return std::nullopt;
}

DeficientBipartiteBase gamma(const Graph& base, int ell, int d, const SearchBudget& budget) {
  if (ell < 1 || d < 0) throw std::invalid_argument("gamma needs ell >= 1 and d >= 0");
  auto r = is_regular(base);
  if (!r || *r < 1) throw std::invalid_argument("gamma needs a regular base");
  if (!bipartition(base)) throw std::invalid_argument("gamma needs a bipartite base");
  const int g = girth(base);
  if (g == kInfinity || g < ell * (d + 2)) {
    throw std::invalid_argument("girth too small: need at least " +
                                std::to_string(ell * (d + 2)));
  }
  std::vector<Vertex> cycle = shortest_cycle(base);
  const int len = static_cast<int>(cycle.size());
  auto gaps_ok = [&](const std::vector<int>& starts) {
    for (int i = 0; i < ell; ++i) {
      int next = i + 1 < ell ? starts[i + 1] : starts[0] + len;
      if (next - starts[i] < d + 2) return false;
    }
    return true;
  };
  std::vector<int> starts(ell);
  for (int i = 0; i < ell; ++i) starts[i] = 2 * ((i * len) / (2 * ell));
  if (!gaps_ok(starts)) {
    for (int i = 0; i < ell; ++i) starts[i] = (i * len) / ell;
    if (!gaps_ok(starts)) throw std::invalid_argument("cycle too short to space the edges");
  }
  // A shortest cycle is isometric, so spacing along it is spacing in the graph.
  EdgeSet removed;
  for (int s : starts) removed.push_back(make_edge(cycle[s], cycle[(s + 1) % len]));
  if (!is_distance_d_matching(base, Matching(normalize(removed)), d + 1)) {
    throw std::logic_error("removed edges are closer than d + 1");
  }
  DeficientBipartiteBase out = remove_cycle_edges(base, *r, cycle, starts);
  measure_base(out, budget);
  return out;
}

DeficientBipartiteBase cycle_base(int ell, int r, int separation, std::uint64_t seed,
                                  int max_half_order) {
  if (ell < 1 || r < 2) throw std::invalid_argument("cycle_base needs ell >= 1 and r >= 2");
  int h = std::max({2 * ell, r + 2, 4});
  for (std::uint64_t attempt = 0; h <= max_half_order; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    const int n = 2 * h;
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> used(h, std::vector<bool>(h, false));  // [even/2][odd/2]
    for (int p = 0; p < n; ++p) {
      int a = p, b = (p + 1) % n;
      int even = a % 2 == 0 ? a : b, odd = a % 2 == 0 ? b : a;
      used[even / 2][odd / 2] = true;
      edges.push_back(make_edge(a, b));
    }
    bool ok = true;
    for (int t = 0; t < r - 2 && ok; ++t) {
      std::vector<int> perm(h);
      bool placed = false;
      for (int tries = 0; tries < 200 && !placed; ++tries) {
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        placed = true;
        for (int i = 0; i < h && placed; ++i) placed = !used[i][perm[i]];
      }
      if (!placed) {
        ok = false;
        break;
      }
      for (int i = 0; i < h; ++i) {
        used[i][perm[i]] = true;
        edges.push_back(make_edge(2 * i, 2 * perm[i] + 1));
      }
    }
    if (ok) {
      Graph full(n, normalize(edges));
      std::vector<Vertex> cycle(n);
      std::iota(cycle.begin(), cycle.end(), 0);
      std::vector<int> nearest(n, kInfinity);
      std::vector<int> starts;
      for (int s = 0; s < n && static_cast<int>(starts.size()) < ell; s += 2) {
        if (nearest[s] < separation || nearest[s + 1] < separation) continue;
        starts.push_back(s);
        for (Vertex end : {s, s + 1}) {
          std::vector<int> dist = distances_from(full, end);
          for (int v = 0; v < n; ++v) nearest[v] = std::min(nearest[v], dist[v]);
        }
      }
      if (static_cast<int>(starts.size()) == ell) {
        DeficientBipartiteBase base = remove_cycle_edges(full, r, cycle, starts);
        base.measured.girth = girth(base.graph);
        base.measured.separation =
            deficient_separation(base.graph, all_deficient(base));
        if (base.measured.separation >= separation && validate_base(base)) return base;
      }
    }
    h += std::max(1, h / 8);
  }
  throw GenerationError("cycle_base: no base found within the order limit");
}

// ---------------------------------------------------------------------------
// Builders.

Verification validate_output(const ConstructionOutput& out) {
  std::vector<Vertex> targets;
  for (const auto& [name, v] : out.names) {
    if (!out.graph.is_vertex(v)) return Verification::fail("name-out-of-range");
    targets.push_back(v);
  }
  if (normalize(targets).size() != targets.size()) return Verification::fail("shared-name");
  for (const Edge& e : out.matching.edges()) {
    if (!out.graph.has_edge(e.u, e.v)) return Verification::fail("matching-not-in-graph");
  }
  return Verification::pass();
}

ConstructionOutput build_lemma3_counterexample(int k, const DeficientBipartiteBase& base) {
  if (k < 2) throw std::invalid_argument("the counterexample needs k >= 2");
  require_base(base, 3, 4 * k + 2, false, "counterexample");
  if (deficient_separation(base.graph, all_deficient(base)) < 3) {
    throw std::invalid_argument("counterexample: deficient vertices closer than 3");
  }
  Assembler out;
  const int off = out.add_block(base.graph);
  const auto b = shifted(base.side_b_deficient, off);
  const auto w = shifted(base.side_w_deficient, off);
  name_all(out, "b", b);
  name_all(out, "w", w);

  std::vector<Vertex> u(k + 1);
  for (int i = 1; i <= k; ++i) u[i] = out.add_vertex(label("u", i));
  const int tree_start = out.order();
  std::vector<Vertex> x(2 * k + 2), y(2 * k + 2), s(k + 1);
  for (int i = 1; i <= 2 * k + 1; ++i) x[i] = out.add_vertex(label("x", i));
  for (int i = 1; i <= 2 * k + 1; ++i) y[i] = out.add_vertex(label("y", i));
  for (int i = 1; i <= k; ++i) s[i] = out.add_vertex(label("s", i));
  const int tree_end = out.order();

  for (int i = 1; i <= 2 * k; ++i) out.add_edge(x[i], x[i + 1]);
  for (int i = 1; i <= 2 * k + 1; ++i) {
    if (i % 2 == 0) {
      out.add_edge(x[i], s[i / 2]);
      out.add_edge(s[i / 2], y[i]);
    } else {
      out.add_edge(x[i], y[i]);
    }
  }
  std::vector<Vertex> tree_degree_two{x[1]};
  for (int i = 1; i <= k; ++i) tree_degree_two.push_back(s[i]);
  tree_degree_two.push_back(x[2 * k + 1]);
  for (int j = 0; j < k + 2; ++j) out.add_edge(tree_degree_two[j], b[j]);
  for (int i = 1; i <= 2 * k + 1; ++i) {
    out.add_edge(y[i], w[2 * i - 2]);
    out.add_edge(y[i], w[2 * i - 1]);
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = k + 3 * i; j <= k + 3 * i + 2; ++j) out.add_edge(u[i], b[j - 1]);
  }

  ConstructionOutput result;
  result.family = "lemma3-counterexample";
  result.parameters = {{"k", k}};
  result.r = 3;
  result.graph = out.finish();
  result.names = out.names();
  EdgeSet m;
  for (int i = 1; i <= 2 * k + 1; ++i) m.push_back(make_edge(y[i], w[2 * i - 1]));
  result.matching = Matching(normalize(m));
  result.cut_side = block_vertices(tree_start, tree_end - tree_start);
  result.expectations = {
      guaranteed(Property::kRegular, 3),
      guaranteed(Property::kEvenOrder, 1),
      guaranteed(Property::kBipartite, 1),
      guaranteed(Property::kMatchingSize, 2 * k + 1),
      guaranteed(Property::kDistanceMatching, 4),
      guaranteed(Property::kCutSize, 5 * k + 4),
      guaranteed(Property::kOddEarsAtMost, 5 * k + 4),
      asymptotic(Property::kLambdaCAtLeast, 6 * k + 3),
  };
  return result;
}

ConstructionOutput build_sharpness_i(int m, int r, const DeficientBipartiteBase& base1,
                                     const DeficientBipartiteBase& base2) {
  if (m < 2 || r < 3) throw std::invalid_argument("sharpness-i needs m >= 2 and r >= 3");
  const int alpha = m * (r - 1);
  const int up = ceil_half(r), down = floor_half(r);
  require_base(base1, r, alpha + up, true, "sharpness-i base 1");
  require_base(base2, r, alpha, true, "sharpness-i base 2");

  Assembler out;
  const int off1 = out.add_block(base1.graph);
  const auto x = shifted(base1.side_b_deficient, off1);
  const auto y = shifted(base1.side_w_deficient, off1);
  name_all(out, "x", x);
  name_all(out, "y", y);
  const Vertex q1 = out.add_vertex("q_1");
  const int off2 = out.add_block(base2.graph);
  const auto z = shifted(base2.side_b_deficient, off2);
  const auto u = shifted(base2.side_w_deficient, off2);
  name_all(out, "z", z);
  name_all(out, "u", u);
  const Vertex q2 = out.add_vertex("q_2");
  std::vector<Vertex> b(m), w(m);
  for (int i = 0; i < m; ++i) {
    b[i] = out.add_vertex(label("b", i + 1));
    w[i] = out.add_vertex(label("w", i + 1));
    out.add_edge(b[i], w[i]);
  }

  // Indices below are 1-based as in the family's description.
  for (int i = alpha - down + 1; i <= alpha + up; ++i) out.add_edge(q1, y[i - 1]);
  for (int i = alpha - up + 1; i <= alpha; ++i) out.add_edge(q2, z[i - 1]);
  for (int i = alpha - down + 1; i <= alpha; ++i) out.add_edge(q2, u[i - 1]);
  for (int i = 1; i <= alpha - down; ++i) out.add_edge(y[i - 1], u[i - 1]);

  Pool xs(x);
  Pool zs(std::vector<Vertex>(z.begin(), z.begin() + (alpha - up)));
  for (int i = 0; i < m - 1; ++i) {
    xs.join(out, b[i], ceil_half(r - 1));
    zs.join(out, b[i], floor_half(r - 1));
    xs.join(out, w[i], floor_half(r - 1));
    zs.join(out, w[i], ceil_half(r - 1));
  }
  xs.join(out, b[m - 1], up);
  zs.join(out, b[m - 1], down - 1);
  xs.join(out, w[m - 1], r - 1);
  if (!xs.exhausted() || !zs.exhausted()) throw std::logic_error("join rules left vertices");

  ConstructionOutput result;
  result.family = "sharpness-i";
  result.parameters = {{"m", m}, {"r", r}, {"alpha", alpha}};
  result.r = r;
  result.graph = out.finish();
  result.names = out.names();
  EdgeSet mm;
  for (int i = 0; i < m; ++i) mm.push_back(make_edge(b[i], w[i]));
  result.matching = Matching(normalize(mm));

  auto parts = bipartition(base1.graph);
  const VertexSet& y_side = contains(parts->white, base1.side_w_deficient[0]) ? parts->white
                                                                              : parts->black;
  const VertexSet& other_side = &y_side == &parts->white ? parts->black : parts->white;
  result.barrier_s = normalize(shifted(y_side, off1));
  for (Vertex v : other_side) result.expected_components.push_back({v + off1});
  result.expected_components.push_back({q1});
  VertexSet h2 = block_vertices(off2, base2.graph.order());
  h2.push_back(q2);
  result.expected_components.push_back(normalize(h2));
  std::sort(result.expected_components.begin(), result.expected_components.end());

  const int sep = std::min(deficient_separation(base1.graph, all_deficient(base1)),
                           deficient_separation(base2.graph, all_deficient(base2)));
  result.expectations = {
      guaranteed(Property::kRegular, r),
      guaranteed(Property::kEvenOrder, 1),
      guaranteed(Property::kMatchingSize, m),
      guaranteed(Property::kDistanceMatching, sep + 2),
      guaranteed(Property::kBlocked, 1),
      guaranteed(Property::kBarrier, 1),
      guaranteed(Property::kComponents,
                 static_cast<long long>(result.expected_components.size())),
      asymptotic(Property::kOddEarsAtLeast, m * r - up),
      asymptotic(Property::kLambdaCAtLeast, 2 * m * (r - 1) - r),
  };
  return result;
}

ConstructionOutput build_sharpness_lambda(int m, int r, const DeficientBipartiteBase& base1,
                                          const DeficientBipartiteBase& base2) {
  if (m < 2 || r < 3) throw std::invalid_argument("sharpness-lambda needs m >= 2 and r >= 3");
  const int rho = ceil_half((m + 1) * (r - 1));
  const bool even = m % 2 == 0 && r % 2 == 0;
  const int rho2 = even ? rho : rho + 1;
  const int up = ceil_half(r), down = floor_half(r);
  require_base(base1, r, rho, true, "sharpness-lambda base 1");
  require_base(base2, r, rho2, true, "sharpness-lambda base 2");

  Assembler out;
  // The apex joins the last ceil(r/2) x's and last floor(r/2) y's; the rest
  // of the deficient vertices form the pool U.
  auto add_half = [&](const DeficientBipartiteBase& base, int ell, const std::string& prime,
                      int& offset, Vertex& apex) {
    offset = out.add_block(base.graph);
    const auto x = shifted(base.side_b_deficient, offset);
    const auto y = shifted(base.side_w_deficient, offset);
    name_all(out, "x" + prime, x);
    name_all(out, "y" + prime, y);
    apex = out.add_vertex("q" + prime);
    for (int i = ell - up + 1; i <= ell; ++i) out.add_edge(apex, x[i - 1]);
    for (int i = ell - down + 1; i <= ell; ++i) out.add_edge(apex, y[i - 1]);
    std::vector<Vertex> pool(x.begin(), x.begin() + (ell - up));
    pool.insert(pool.end(), y.begin(), y.begin() + (ell - down));
    return pool;
  };
  int off1 = 0, off2 = 0;
  Vertex q = 0, q_prime = 0;
  Pool u1(add_half(base1, rho, "", off1, q));
  Pool u2(add_half(base2, rho2, "'", off2, q_prime));
  std::vector<Vertex> b(m), w(m);
  for (int i = 0; i < m; ++i) {
    b[i] = out.add_vertex(label("b", i + 1));
    w[i] = out.add_vertex(label("w", i + 1));
    out.add_edge(b[i], w[i]);
  }
  for (int i = 0; i < m; ++i) {
    if (!even && i == m - 1) {
      u1.join(out, b[i], ceil_half(r - 1) - 1);
      u2.join(out, b[i], floor_half(r - 1) + 1);
    } else {
      u1.join(out, b[i], ceil_half(r - 1));
      u2.join(out, b[i], floor_half(r - 1));
    }
    u1.join(out, w[i], floor_half(r - 1));
    u2.join(out, w[i], ceil_half(r - 1));
  }
  if (!u1.exhausted() || !u2.exhausted()) throw std::logic_error("join rules left vertices");

  ConstructionOutput result;
  result.family = "sharpness-lambda";
  result.parameters = {{"m", m}, {"r", r}, {"rho", rho}};
  result.r = r;
  result.graph = out.finish();
  result.names = out.names();
  EdgeSet mm;
  for (int i = 0; i < m; ++i) mm.push_back(make_edge(b[i], w[i]));
  result.matching = Matching(normalize(mm));
  VertexSet h1 = block_vertices(off1, base1.graph.order());
  h1.push_back(q);
  VertexSet h2 = block_vertices(off2, base2.graph.order());
  h2.push_back(q_prime);
  result.expected_components = {normalize(h1), normalize(h2)};
  result.cut_side = normalize(h1);
  const int cut = 2 * rho - r;
  const int ears = even ? m * r : m * r - up + 1;
  result.expectations = {
      guaranteed(Property::kRegular, r),
      guaranteed(Property::kEvenOrder, 1),
      guaranteed(Property::kMatchingSize, m),
      guaranteed(Property::kBlocked, 1),
      guaranteed(Property::kBarrier, 1),
      guaranteed(Property::kComponents, 2),
      guaranteed(Property::kCutSize, cut),
      asymptotic(Property::kOddEarsAtLeast, ears),
      asymptotic(Property::kLambdaCAtLeast, cut),
  };
  return result;
}

ConstructionOutput build_sharpness_ii(int m, int r, const DeficientBipartiteBase& base) {
  if (m < 2 || r < 3) throw std::invalid_argument("sharpness-ii needs m >= 2 and r >= 3");
  require_base(base, r, m, false, "sharpness-ii");
  const auto& x = base.side_b_deficient;
  const auto& y = base.side_w_deficient;
  for (int i = 2; i < m; ++i) {
    if (base.graph.has_edge(x[i], y[i])) {
      throw std::invalid_argument("sharpness-ii: x_i and y_i already adjacent");
    }
  }
  Assembler out;
  out.add_block(base.graph);
  name_all(out, "x", x);
  name_all(out, "y", y);
  out.add_edge(x[0], x[1]);
  out.add_edge(y[0], y[1]);
  for (int i = 2; i < m; ++i) out.add_edge(x[i], y[i]);
  Graph g = out.finish();

  VertexSet taken{x[0], x[1], y[0], y[1]};
  for (int i = 2; i < m; ++i) {
    taken.push_back(x[i]);
    taken.push_back(y[i]);
  }
  taken = normalize(taken);
  std::optional<Vertex> x2_star;
  for (Vertex v : g.neighbors(y[1])) {
    if (!contains(taken, v)) {
      x2_star = v;
      break;
    }
  }
  if (!x2_star) throw std::invalid_argument("sharpness-ii: x_2* undefined");
  out.name("x_2*", *x2_star);

  ConstructionOutput result;
  result.family = "sharpness-ii";
  result.parameters = {{"m", m}, {"r", r}};
  result.r = r;
  result.graph = std::move(g);
  result.names = out.names();
  EdgeSet mm{make_edge(x[0], x[1]), make_edge(y[1], *x2_star)};
  for (int i = 2; i < m; ++i) mm.push_back(make_edge(x[i], y[i]));
  result.matching = Matching(normalize(mm));

  auto parts = bipartition(base.graph);
  const VertexSet& covered = result.matching.covered();
  auto outside = [&](const VertexSet& side) {
    VertexSet rest;
    std::set_difference(side.begin(), side.end(), covered.begin(), covered.end(),
                        std::back_inserter(rest));
    return rest;
  };
  const bool x_black = contains(parts->black, x[0]);
  result.remainder_sides = {outside(x_black ? parts->black : parts->white),
                            outside(x_black ? parts->white : parts->black)};
  result.expectations = {
      guaranteed(Property::kRegular, r),
      guaranteed(Property::kEvenOrder, 1),
      guaranteed(Property::kMatchingSize, m),
      guaranteed(Property::kBlocked, 1),
      guaranteed(Property::kUnbalancedRemainder, 2),
      asymptotic(Property::kOddEarsAtLeast, static_cast<long long>(m - 1) * r),
      asymptotic(Property::kLambdaCAtLeast, static_cast<long long>(2 * m - 1) * (r - 1)),
  };
  return result;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kLemma3Counterexample: return "lemma3-counterexample";
    case Family::kSharpnessI: return "sharpness-i";
    case Family::kSharpnessLambda: return "sharpness-lambda";
    case Family::kSharpnessII: return "sharpness-ii";
  }
  return "";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::kLemma3Counterexample, Family::kSharpnessI,
                   Family::kSharpnessLambda, Family::kSharpnessII}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

ConstructionOutput build_family(Family family, int size, int r, std::uint64_t seed) {
  constexpr int kSeparation = 3;
  switch (family) {
    case Family::kLemma3Counterexample: {
      if (r != 3) throw std::invalid_argument("the counterexample is cubic (r = 3)");
      if (size < 2) throw std::invalid_argument("the counterexample needs k >= 2");
      return build_lemma3_counterexample(size, cycle_base(4 * size + 2, 3, kSeparation, seed));
    }
    case Family::kSharpnessI: {
      if (size < 2 || r < 3) throw std::invalid_argument("sharpness-i needs m >= 2 and r >= 3");
      const int alpha = size * (r - 1);
      return build_sharpness_i(
          size, r, cycle_base(alpha + ceil_half(r), r, kSeparation, derive_seed(seed, 1)),
          cycle_base(alpha, r, kSeparation, derive_seed(seed, 2)));
    }
    case Family::kSharpnessLambda: {
      if (size < 2 || r < 3) {
        throw std::invalid_argument("sharpness-lambda needs m >= 2 and r >= 3");
      }
      const int rho = ceil_half((size + 1) * (r - 1));
      const bool even = size % 2 == 0 && r % 2 == 0;
      return build_sharpness_lambda(
          size, r, cycle_base(rho, r, kSeparation, derive_seed(seed, 1)),
          cycle_base(even ? rho : rho + 1, r, kSeparation, derive_seed(seed, 2)));
    }
    case Family::kSharpnessII: {
      if (size < 2 || r < 3) throw std::invalid_argument("sharpness-ii needs m >= 2 and r >= 3");
      return build_sharpness_ii(size, r, cycle_base(size, r, kSeparation, seed));
    }
  }
  throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------------------
// Verification.

bool ExpectationReport::ok() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const ExpectationRow& row) { return row.status == RowStatus::kFail; });
}

namespace {

struct Measurement {
  std::string measured;
  std::optional<bool> holds;
};

std::string show(int value) { return value == kInfinity ? "inf" : std::to_string(value); }

int min_matching_distance(const Graph& g, const Matching& m) {
  int best = kInfinity;
  const EdgeSet& edges = m.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      best = std::min(best, edge_distance(g, edges[i], edges[j]));
    }
  }
  return best;
}

Measurement measure(const ConstructionOutput& out, const Expectation& e,
                    const VerifyOptions& options) {
  const Graph& g = out.graph;
  const Matching& m = out.matching;
  switch (e.property) {
    case Property::kRegular: {
      auto r = is_regular(g);
      return {r ? std::to_string(*r) : "irregular", r && *r == e.predicted};
    }
    case Property::kEvenOrder: {
      const bool even = g.order() % 2 == 0;
      return {"order " + std::to_string(g.order()), even == (e.predicted != 0)};
    }
    case Property::kBipartite: {
      const bool bip = bipartition(g).has_value();
      return {bip ? "bipartite" : "not bipartite", bip == (e.predicted != 0)};
    }
    case Property::kMatchingSize:
      return {std::to_string(m.size()), m.size() == e.predicted};
    case Property::kDistanceMatching: {
      require_matching_of(g, m);
      const int d = min_matching_distance(g, m);
      return {show(d), d >= e.predicted};
    }
    case Property::kBlocked: {
      ExtensionResult ext = extend_matching(g, m);
      if (ext.extended()) return {"extended", e.predicted == 0};
      Verification v = verify_barrier(g, m, *ext.barrier);
      if (!v) return {"blocked, barrier rejected: " + v.reason, false};
      return {"blocked, barrier |S| = " + std::to_string(ext.barrier->size_s()) + " with " +
                  std::to_string(ext.barrier->odd_components.size()) + " odd components",
              e.predicted != 0};
    }
    case Property::kBarrier: {
      BarrierCertificate cert = make_barrier_certificate(g, m, out.barrier_s);
      Verification v = verify_barrier(g, m, cert);
      if (!v) return {"rejected: " + v.reason, false};
      return {"|S| = " + std::to_string(cert.size_s()) + ", odd components " +
                  std::to_string(cert.odd_components.size()),
              e.predicted != 0};
    }
    case Property::kComponents: {
      VertexSet removed = m.covered();
      removed.insert(removed.end(), out.barrier_s.begin(), out.barrier_s.end());
      removed = normalize(removed);
      InducedSubgraph rest = induced_subgraph(g, complement(g.order(), removed));
      std::vector<VertexSet> comps;
      for (const VertexSet& c : connected_components(rest.graph)) {
        VertexSet host;
        for (Vertex v : c) host.push_back(rest.to_host[v]);
        comps.push_back(normalize(host));
      }
      std::sort(comps.begin(), comps.end());
      std::vector<VertexSet> expected = out.expected_components;
      std::sort(expected.begin(), expected.end());
      const bool same = comps == expected;
      return {std::to_string(comps.size()) + (same ? " as designed" : " differing from design"),
              same && static_cast<long long>(comps.size()) == e.predicted};
    }
    case Property::kUnbalancedRemainder: {
      const auto& [first, second] = out.remainder_sides;
      VertexSet rest = complement(g.order(), m.covered());
      VertexSet sides = first;
      sides.insert(sides.end(), second.begin(), second.end());
      bool split = normalize(sides) == rest && normalize(sides).size() == sides.size();
      for (const Edge& edge : g.edges()) {
        if (!split) break;
        if (!contains(rest, edge.u) || !contains(rest, edge.v)) continue;
        split = contains(first, edge.u) != contains(first, edge.v);
      }
      const long long surplus =
          static_cast<long long>(second.size()) - static_cast<long long>(first.size());
      return {(split ? "bipartite, surplus " : "not split, surplus ") + std::to_string(surplus),
              split && surplus == e.predicted};
    }
    case Property::kCutSize: {
      const int size = static_cast<int>(boundary_edges(g, out.cut_side).size());
      return {std::to_string(size), size == e.predicted};
    }
    case Property::kOddEarsAtMost: {
      PackingResult p =
          max_odd_ear_packing(g, m.covered(), std::nullopt, options.budget.max_ear_nodes);
      if (!p.exact()) return {">= " + std::to_string(p.packing.k()) + " (budget)", std::nullopt};
      return {std::to_string(p.packing.k()), p.packing.k() <= e.predicted};
    }
    case Property::kOddEarsAtLeast: {
      PackingResult p = max_odd_ear_packing(g, m.covered(), static_cast<int>(e.predicted),
                                            options.budget.max_ear_nodes);
      switch (p.outcome) {
        case SearchOutcome::kTargetReached:
          return {">= " + std::to_string(p.packing.k()), true};
        case SearchOutcome::kImpossible:
        case SearchOutcome::kMaximum:
          return {"max " + std::to_string(p.packing.k()), p.packing.k() >= e.predicted};
        case SearchOutcome::kUnknown:
          return {">= " + std::to_string(p.packing.k()) + " (budget)", std::nullopt};
      }
      return {"", std::nullopt};
    }
    case Property::kLambdaCAtLeast: {
      try {
        ConnectivityValue v = cyclic_edge_connectivity(g, options.budget);
        return {show(v.value), v.value >= e.predicted};
      } catch (const InexactError& err) {
        std::optional<bool> holds;
        if (err.upper_bound() < e.predicted) holds = false;
        return {"<= " + show(err.upper_bound()) + " (budget)", holds};
      }
    }
  }
  return {"", std::nullopt};
}

}  // namespace

ExpectationReport verify_expectations(const ConstructionOutput& out,
                                      const VerifyOptions& options) {
  ExpectationReport report;
  for (const Expectation& e : out.expectations) {
    ExpectationRow row;
    row.expectation = e;
    Measurement result;
    try {
      result = measure(out, e, options);
    } catch (const std::exception& err) {
      result = {std::string("error: ") + err.what(), false};
    }
    row.measured = std::move(result.measured);
    if (e.basis == Basis::kGuaranteed) {
      row.status = result.holds.value_or(false) ? RowStatus::kPass : RowStatus::kFail;
    } else {
      row.status = RowStatus::kReported;
      row.holds = result.holds;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string_view property_name(Property property) {
  switch (property) {
    case Property::kRegular: return "regular";
    case Property::kEvenOrder: return "even-order";
    case Property::kBipartite: return "bipartite";
    case Property::kMatchingSize: return "matching-size";
    case Property::kDistanceMatching: return "distance-matching";
    case Property::kBlocked: return "blocked";
    case Property::kBarrier: return "barrier";
    case Property::kComponents: return "components";
    case Property::kUnbalancedRemainder: return "unbalanced-remainder";
    case Property::kCutSize: return "cut-size";
    case Property::kOddEarsAtMost: return "odd-ears-at-most";
    case Property::kOddEarsAtLeast: return "odd-ears-at-least";
    case Property::kLambdaCAtLeast: return "lambda-c-at-least";
  }
  return "";
}

std::string_view basis_name(Basis basis) {
  return basis == Basis::kGuaranteed ? "guaranteed-by-assembly" : "paper-asymptotic";
}

std::string_view status_name(RowStatus status) {
  switch (status) {
    case RowStatus::kPass: return "pass";
    case RowStatus::kFail: return "fail";
    case RowStatus::kReported: return "reported";
  }
  return "";
}

}  // namespace earpack
