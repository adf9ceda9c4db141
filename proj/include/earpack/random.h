#ifndef EARPACK_RANDOM_H_
#define EARPACK_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace earpack {

// Seeded generator with distribution code pinned here rather than left to
// the standard library, so a seed replays identically on every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). Rejection sampling, bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    while (true) {
      std::uint64_t x = engine_();
      if (x >= limit) return x % bound;
    }
  }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Derives an independent stream seed for job `index` of a run seeded `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace earpack

#endif  // EARPACK_RANDOM_H_
