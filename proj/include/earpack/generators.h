#ifndef EARPACK_GENERATORS_H_
#define EARPACK_GENERATORS_H_

#include <cstdint>
#include <stdexcept>

#include "earpack/graph.h"

namespace earpack {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple r-regular graph on n vertices from the pairing model, redrawing
// whenever a loop or repeated pair appears. The result depends only on
// (n, r, seed). Throws std::invalid_argument unless n*r is even and n > r,
// and GenerationError once `max_attempts` draws have all been rejected.
Graph random_regular(int n, int r, std::uint64_t seed, int max_attempts = 100000);

// Bipartite analogue on parts 0..h-1 and h..2h-1: the points of one side
// are paired with a shuffled copy of the other side's points. Throws
// std::invalid_argument unless h >= r >= 0.
Graph random_bipartite_regular(int h, int r, std::uint64_t seed, int max_attempts = 100000);

}  // namespace earpack

#endif  // EARPACK_GENERATORS_H_
