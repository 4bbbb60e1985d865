#include "bivseq/operators.hpp"

#include <string>

#include "bits_detail.hpp"

namespace bivseq {

namespace {
// Bits at even element offsets 0, 2, 4, ...
constexpr std::uint64_t kEvenMask = 0x5555555555555555ull;
}  // namespace

BitSequence apply_i(const BitSequence& s) {
    if (s.size() & 1)
        throw LengthNotAligned("quarter turn needs an even length, got " +
                               std::to_string(s.size()));
    BitSequence out(s.size());
    auto dst = out.words();
    auto src = s.words();
    for (std::size_t i = 0; i < src.size(); ++i) {
        const std::uint64_t w = src[i];
        // (a, b) -> (-b, a):  even slot takes the negated odd bit above it,
        // odd slot takes the even bit below it.
        dst[i] = ((~w >> 1) & kEvenMask) | ((w & kEvenMask) << 1);
    }
    out.mask_tail();
    return out;
}

BitSequence apply_i_root(unsigned root_log2, const BitSequence& s) {
    if (root_log2 == 0) return apply_i(s);
    if (root_log2 > 57) throw LengthNotAligned("root order too large");

    const std::uint64_t block = std::uint64_t{1} << (root_log2 + 1);
    if (s.size() % block != 0)
        throw LengthNotAligned("root of order " + std::to_string(root_log2) +
                               " needs a multiple of " + std::to_string(block) +
                               " elements, got " + std::to_string(s.size()));

    BitSequence out(s.size());
    const std::uint64_t half = block / 2;
    // One zero sentinel word lets read-based copies run branch-free.
    std::vector<std::uint64_t> src(s.words().begin(), s.words().end());
    src.push_back(0);
    auto* dst = out.words().data();

    for (std::uint64_t base = 0; base < s.size(); base += block) {
        detail::set_bit({dst, out.words().size()}, base,
                        !detail::get_bit(src, base + block - 1));
        detail::set_bit({dst, out.words().size()}, base + 1,
                        detail::get_bit(src, base + block - 2));
        for (unsigned m = 2; m <= root_log2; ++m) {
            const std::uint64_t len = std::uint64_t{1} << (m - 1);
            detail::copy_bits(dst, base + len, src.data(),
                              base + block - 2 * len, len);
        }
        detail::copy_bits(dst, base + half, src.data(), base, half);
    }
    out.mask_tail();
    return out;
}

BitSequence apply_i_power(const DyadicExponent& q, const BitSequence& s) {
    const unsigned n = q.log2_denominator();
    const std::uint64_t block = std::uint64_t{1} << (n + 1);
    if (s.size() % block != 0)
        throw LengthNotAligned("exponent " + q.to_string() +
                               " needs a multiple of " + std::to_string(block) +
                               " elements, got " + std::to_string(s.size()));

    // q = k/2^n: the high bits of k are whole quarter turns, and fractional
    // bit j contributes one root of order n - j.
    BitSequence out = s;
    const std::uint64_t k = q.numerator();
    for (std::uint64_t t = k >> n; t > 0; --t) out = apply_i(out);
    for (unsigned j = 0; j < n; ++j) {
        if ((k >> j) & 1) out = apply_i_root(n - j, out);
    }
    return out;
}

}  // namespace bivseq
