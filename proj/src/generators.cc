#include "earpack/generators.h"

#include <set>
#include <string>
#include <vector>

#include "earpack/random.h"

namespace earpack {

Graph random_regular(int n, int r, std::uint64_t seed, int max_attempts) {
  if (r < 0 || n <= r) throw std::invalid_argument("random_regular needs n > r >= 0");
  if ((static_cast<long long>(n) * r) % 2 != 0) {
    throw std::invalid_argument("random_regular needs n*r even");
  }
  Rng rng(seed);
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(n) * r);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    points.clear();
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), r, v);
    rng.shuffle(points);
    std::set<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      if (points[i] == points[i + 1] ||
          !edges.insert(make_edge(points[i], points[i + 1])).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph(n, list);
  }
  throw GenerationError("random_regular: no simple graph after " +
                        std::to_string(max_attempts) + " pairings");
}

Graph random_bipartite_regular(int h, int r, std::uint64_t seed, int max_attempts) {
  if (r < 0 || h < r) throw std::invalid_argument("random_bipartite_regular needs h >= r >= 0");
  Rng rng(seed);
  std::vector<Vertex> white;
  white.reserve(static_cast<std::size_t>(h) * r);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    white.clear();
    for (Vertex v = h; v < 2 * h; ++v) white.insert(white.end(), r, v);
    rng.shuffle(white);
    std::set<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < white.size() && ok; ++i) {
      ok = edges.insert(make_edge(static_cast<Vertex>(i) / r, white[i])).second;
    }
    if (!ok) continue;
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph(2 * h, list);
  }
  throw GenerationError("random_bipartite_regular: no simple graph after " +
                        std::to_string(max_attempts) + " pairings");
}

}  // namespace earpack
