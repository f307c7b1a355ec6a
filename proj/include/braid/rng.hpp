#pragma once

#include <cstdint>

#include "braid/braids.hpp"
#include "braid/ends.hpp"

namespace braid {

/// splitmix64; self-contained so seeded runs are reproducible across
/// standard libraries.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int k) { return k <= 1 ? 0 : static_cast<int>(next() % k); }
  bool flip() { return next() & 1; }
};

FreeWord random_reduced_word(Rng& rng, int rank, int max_len);
BraidWord random_braid(Rng& rng, int strands, int max_len);
End random_end(Rng& rng, int rank, int max_len);

}  // namespace braid
