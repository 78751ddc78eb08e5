#pragma once

#include <cstdint>

#include "wh/word.hpp"

namespace wh {

// Deterministic generator with a stable cross-platform output stream, so
// seeded runs produce byte-identical results everywhere.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

// Uniform-ish cyclically reduced word of exactly the requested length:
// each letter avoids cancelling its cyclic neighbours, so no reduction occurs.
CyclicWord random_cyclic_word(int rank, std::size_t length, SplitMix64& rng);

}  // namespace wh
