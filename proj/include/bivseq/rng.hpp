#pragma once

#include <cstdint>

#include "bivseq/bit_sequence.hpp"

namespace bivseq {

//! splitmix64: one 64-bit multiply-xorshift step per output word.
//! Small, seedable from a single word, and statistically solid, which is
//! what per-trial derived generators need.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

// Seed for the `stream`-th derived generator of a run. Trials seeded through
// this are independent of how they are distributed over threads, which is
// what makes reports byte-identical at any parallelism degree.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Fresh uniform +-1 sequence of the given length.
inline BitSequence random_sequence(std::uint64_t length, SplitMix64& g) {
    BitSequence s(length);
    for (std::uint64_t& w : s.words()) w = g.next();
    s.mask_tail();
    return s;
}

}  // namespace bivseq
