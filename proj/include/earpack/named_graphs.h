#ifndef EARPACK_NAMED_GRAPHS_H_
#define EARPACK_NAMED_GRAPHS_H_

#include <optional>
#include <span>
#include <string_view>

#include "earpack/graph.h"

namespace earpack::named {

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph empty(int n);
// Two triangles joined by a perfect matching.
Graph prism();

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
Graph petersen();

// Hamiltonian graph from LCF notation: vertex i is joined to i +- 1 and to
// i + jumps[i mod |jumps|] (mod n).
Graph from_lcf(int n, std::span<const int> jumps);

Graph heawood();        // LCF [5,-5]^7, cubic, girth 6, 14 vertices
Graph tutte_coxeter();  // LCF [-13,-9,7,-7,9,13]^5, cubic, girth 8, 30 vertices

// Point-line incidence graph of PG(2, q) built from a Singer difference set;
// (q+1)-regular bipartite of girth 6. Available for q in {2, 3, 4, 5}.
std::optional<Graph> projective_plane_incidence(int q);

// Looks a fixture up by name ("petersen", "heawood", "k4", "k33", ...).
std::optional<Graph> by_name(std::string_view name);

}  // namespace earpack::named

#endif  // EARPACK_NAMED_GRAPHS_H_
