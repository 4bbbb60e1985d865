#include "bivseq/io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace bivseq {

namespace {
constexpr std::array<char, 8> kMagic = {'B', 'I', 'V', 'S', 'E', 'Q', '1', '\n'};
}

void write_bsq1(const BitSequence& s, std::ostream& out) {
    out.write(kMagic.data(), kMagic.size());
    const std::uint64_t n = s.size();
    std::array<char, 8> count;
    for (unsigned b = 0; b < 8; ++b)
        count[b] = static_cast<char>((n >> (8 * b)) & 0xFF);
    out.write(count.data(), count.size());

    // Byte k of the payload holds elements 8k .. 8k+7, LSB first, which is
    // exactly the little-endian byte image of the packed words.
    const std::uint64_t bytes = (n + 7) / 8;
    auto words = s.words();
    for (std::uint64_t k = 0; k < bytes; ++k) {
        const std::uint64_t w = words[k >> 3];
        out.put(static_cast<char>((w >> (8 * (k & 7))) & 0xFF));
    }
    if (!out) throw FileFormatError("write failed");
}

BitSequence read_bsq1(std::istream& in) {
    std::array<char, 8> magic;
    if (!in.read(magic.data(), magic.size()) || magic != kMagic)
        throw FileFormatError("bad magic; not a BIVSEQ1 file");

    std::array<char, 8> count;
    if (!in.read(count.data(), count.size()))
        throw FileFormatError("truncated header");
    std::uint64_t n = 0;
    for (unsigned b = 0; b < 8; ++b)
        n |= static_cast<std::uint64_t>(static_cast<unsigned char>(count[b]))
             << (8 * b);
    if (n == 0) throw FileFormatError("element count must be positive");
    if (n > (std::uint64_t{1} << 40))
        throw FileFormatError("element count implausibly large");

    BitSequence s(n);
    auto words = s.words();
    const std::uint64_t bytes = (n + 7) / 8;
    for (std::uint64_t k = 0; k < bytes; ++k) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof())
            throw FileFormatError("truncated payload");
        words[k >> 3] |= static_cast<std::uint64_t>(c & 0xFF) << (8 * (k & 7));
    }
    if (in.get() != std::char_traits<char>::eof())
        throw FileFormatError("trailing bytes after payload");

    if (n & 7) {
        const unsigned used = n & 7;
        const std::uint64_t last = words[(bytes - 1) >> 3] >> (8 * ((bytes - 1) & 7));
        if ((last & 0xFF) >> used)
            throw FileFormatError("nonzero pad bits in final byte");
    }
    return s;
}

void write_bsq1_file(const BitSequence& s, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FileFormatError("cannot open for writing: " + path.string());
    write_bsq1(s, f);
}

BitSequence read_bsq1_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FileFormatError("cannot open for reading: " + path.string());
    return read_bsq1(f);
}

}  // namespace bivseq
