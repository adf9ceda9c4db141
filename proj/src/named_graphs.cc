#include "earpack/named_graphs.h"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace earpack::named {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, edges);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

Graph empty(int n) { return Graph(n); }

Graph prism() {
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4},
                             {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, edges);
}

Graph from_lcf(int n, std::span<const int> jumps) {
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.insert(make_edge(i, (i + 1) % n));
    int j = jumps[i % jumps.size()];
    edges.insert(make_edge(i, ((i + j) % n + n) % n));
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

Graph heawood() {
  static constexpr std::array<int, 2> kJumps = {5, -5};
  return from_lcf(14, kJumps);
}

Graph tutte_coxeter() {
  static constexpr std::array<int, 6> kJumps = {-13, -9, 7, -7, 9, 13};
  return from_lcf(30, kJumps);
}

std::optional<Graph> projective_plane_incidence(int q) {
  std::vector<int> difference_set;
  switch (q) {
    case 2: difference_set = {0, 1, 3}; break;
    case 3: difference_set = {0, 1, 3, 9}; break;
    case 4: difference_set = {0, 1, 4, 14, 16}; break;
    case 5: difference_set = {0, 1, 3, 8, 12, 18}; break;
    default: return std::nullopt;
  }
  const int points = q * q + q + 1;
  std::vector<Edge> edges;
  for (int line = 0; line < points; ++line) {
    for (int d : difference_set) {
      edges.push_back(make_edge((line + d) % points, points + line));
    }
  }
  return Graph(2 * points, edges);
}

std::optional<Graph> by_name(std::string_view name) {
  if (name == "petersen") return petersen();
  if (name == "heawood") return heawood();
  if (name == "tutte-coxeter" || name == "tutte_coxeter") return tutte_coxeter();
  if (name == "k4") return complete(4);
  if (name == "k33" || name == "k3,3") return complete_bipartite(3, 3);
  if (name == "prism") return prism();
  if (name == "pg23") return projective_plane_incidence(3);
  if (name == "pg24") return projective_plane_incidence(4);
  return std::nullopt;
}

}  // namespace earpack::named
