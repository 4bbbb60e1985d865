#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bivseq/errors.hpp"

namespace bivseq {

struct SequenceStats {
    double mean;
    double variance;  // population form; for +-1 data this is 1 - mean^2 exactly
    std::uint64_t count;
};

// Half-open interval [lo, hi) on the real line.
struct RealInterval {
    double lo;
    double hi;
};

//! Fixed-length sequence over {+1, -1}, packed 64 elements per machine word.
//!
//! Element k (0-based) is bit (k & 63) of word (k >> 6); a set bit encodes +1.
//! The element order therefore runs from the least significant bit upward,
//! which makes "first differing element" of two sequences the lowest set bit
//! of an XOR. Bits at positions >= size() in the last word are always zero;
//! every mutating operation restores that invariant.
class BitSequence {
  public:
    // All-(-1) sequence of n elements. n must be positive.
    explicit BitSequence(std::uint64_t n);

    // Digits of a binary fraction, most significant first: 1 -> +1, 0 -> -1.
    static BitSequence from_real_bits(std::span<const int> digits);

    // Elements given directly as +1 / -1 values.
    static BitSequence from_signs(std::span<const int> signs);

    std::uint64_t size() const { return size_; }

    int sign(std::uint64_t k) const { return bit(k) ? +1 : -1; }
    bool bit(std::uint64_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1u;
    }

    void set_sign(std::uint64_t k, int sign) { set_bit(k, sign > 0); }
    void set_bit(std::uint64_t k, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (k & 63);
        if (value)
            words_[k >> 6] |= mask;
        else
            words_[k >> 6] &= ~mask;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::uint64_t plus_count() const;

    // Zeroes any bits past size() in the last word. Kernels that write whole
    // words call this once at the end instead of masking per element.
    void mask_tail();

    bool operator==(const BitSequence&) const = default;

  private:
    std::uint64_t size_;
    std::vector<std::uint64_t> words_;
};

// Elementwise sign flip.
BitSequence negate(const BitSequence& s);

// Mean, population variance and count. For +-1 elements the variance is
// computed as 1 - mean^2, which equals the direct sum-of-squares form.
SequenceStats stats(const BitSequence& s);

// The interval of reals whose binary expansion starts with this sequence's
// digits (+1 -> 1, -1 -> 0): [sum b_k 2^-k, same + 2^-size). Both endpoints
// are rounded to double; for sizes past ~1074 the interval width underflows.
RealInterval prefix_real(const BitSequence& s);

}  // namespace bivseq
