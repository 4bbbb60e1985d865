#include "bivseq/bit_sequence.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace bivseq {

namespace {
constexpr std::uint64_t word_index(std::uint64_t n) { return n >> 6; }
constexpr std::uint64_t words_for(std::uint64_t n) { return (n + 63) >> 6; }
}  // namespace

BitSequence::BitSequence(std::uint64_t n) : size_(n), words_(words_for(n), 0) {
    if (n == 0) throw EmptyInput();
}

BitSequence BitSequence::from_real_bits(std::span<const int> digits) {
    if (digits.empty()) throw EmptyInput();
    BitSequence s(digits.size());
    for (std::uint64_t k = 0; k < digits.size(); ++k) {
        if (digits[k] != 0 && digits[k] != 1)
            throw std::invalid_argument("binary digit must be 0 or 1");
        s.set_bit(k, digits[k] == 1);
    }
    return s;
}

BitSequence BitSequence::from_signs(std::span<const int> signs) {
    if (signs.empty()) throw EmptyInput();
    BitSequence s(signs.size());
    for (std::uint64_t k = 0; k < signs.size(); ++k) {
        if (signs[k] != 1 && signs[k] != -1)
            throw std::invalid_argument("element must be +1 or -1");
        s.set_bit(k, signs[k] == 1);
    }
    return s;
}

std::uint64_t BitSequence::plus_count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

void BitSequence::mask_tail() {
    const std::uint64_t rem = size_ & 63;
    if (rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

BitSequence negate(const BitSequence& s) {
    BitSequence out = s;
    for (std::uint64_t& w : out.words()) w = ~w;
    out.mask_tail();
    return out;
}

SequenceStats stats(const BitSequence& s) {
    const std::uint64_t n = s.size();
    const std::uint64_t plus = s.plus_count();
    // sum of elements = plus - (n - plus)
    const double mean =
        (static_cast<double>(plus) * 2.0 - static_cast<double>(n)) /
        static_cast<double>(n);
    return SequenceStats{mean, 1.0 - mean * mean, n};
}

RealInterval prefix_real(const BitSequence& s) {
    // Horner from the last digit keeps every intermediate value in [0, 2).
    long double r = 0.0L;
    for (std::uint64_t k = s.size(); k-- > 0;)
        r = r * 0.5L + (s.bit(k) ? 0.5L : 0.0L);
    const double lo = static_cast<double>(r);
    const double width = std::exp2(-static_cast<double>(s.size()));
    return RealInterval{lo, lo + width};
}

}  // namespace bivseq
