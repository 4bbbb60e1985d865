#pragma once

// Word-level helpers shared by the permutation kernels and the file codec.
// All offsets are in bits; words store bit 0 as the first element.

#include <cstdint>
#include <span>

namespace bivseq::detail {

inline bool get_bit(std::span<const std::uint64_t> w, std::uint64_t pos) {
    return (w[pos >> 6] >> (pos & 63)) & 1u;
}

inline void set_bit(std::span<std::uint64_t> w, std::uint64_t pos, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (pos & 63);
    if (v)
        w[pos >> 6] |= m;
    else
        w[pos >> 6] &= ~m;
}

// Reads 64 bits starting at bit `pos`. The caller guarantees the source spans
// one word past the last bit actually consumed (a zero sentinel suffices).
inline std::uint64_t read64(const std::uint64_t* w, std::uint64_t pos) {
    const std::uint64_t i = pos >> 6;
    const unsigned off = static_cast<unsigned>(pos & 63);
    std::uint64_t v = w[i] >> off;
    if (off != 0) v |= w[i + 1] << (64 - off);
    return v;
}

// Writes the low `count` (1..64) bits of `value` at bit `pos`, preserving
// surrounding bits. Destination must have room for the straddled words.
inline void write_bits(std::uint64_t* w, std::uint64_t pos, std::uint64_t value,
                       unsigned count) {
    const std::uint64_t vmask =
        count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
    value &= vmask;
    const std::uint64_t i = pos >> 6;
    const unsigned off = static_cast<unsigned>(pos & 63);
    w[i] = (w[i] & ~(vmask << off)) | (value << off);
    if (off + count > 64) {  // the first word took 64 - off bits; rest spills
        w[i + 1] = (w[i + 1] & ~(vmask >> (64 - off))) | (value >> (64 - off));
    }
}

// Copies `count` bits from src@src_pos to dst@dst_pos. The ranges must not
// overlap (kernels always copy into a fresh buffer).
inline void copy_bits(std::uint64_t* dst, std::uint64_t dst_pos,
                      const std::uint64_t* src, std::uint64_t src_pos,
                      std::uint64_t count) {
    while (count >= 64) {
        const std::uint64_t i = src_pos >> 6;
        const unsigned off = static_cast<unsigned>(src_pos & 63);
        std::uint64_t v = src[i] >> off;
        if (off != 0) v |= src[i + 1] << (64 - off);
        write_bits(dst, dst_pos, v, 64);
        src_pos += 64;
        dst_pos += 64;
        count -= 64;
    }
    if (count == 0) return;
    // Tail chunk, assembled without touching src past its last word.
    std::uint64_t v = 0;
    for (std::uint64_t j = 0; j < count; ++j) {
        v |= static_cast<std::uint64_t>((src[(src_pos + j) >> 6] >>
                                         ((src_pos + j) & 63)) &
                                        1u)
             << j;
    }
    write_bits(dst, dst_pos, v, static_cast<unsigned>(count));
}

}  // namespace bivseq::detail
