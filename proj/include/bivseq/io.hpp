#pragma once

#include <filesystem>
#include <iosfwd>

#include "bivseq/bit_sequence.hpp"

namespace bivseq {

// Binary sequence container:
//   bytes 0..7   magic "BIVSEQ1\n"
//   bytes 8..15  element count, unsigned 64-bit little-endian
//   then ceil(count/8) payload bytes, 8 elements per byte starting at the
//   least significant bit; a set bit encodes +1. Pad bits in the final byte
//   must be zero, and the payload must end the file.
// Readers reject anything violating the above with FileFormatError.

void write_bsq1(const BitSequence& s, std::ostream& out);
BitSequence read_bsq1(std::istream& in);

void write_bsq1_file(const BitSequence& s, const std::filesystem::path& path);
BitSequence read_bsq1_file(const std::filesystem::path& path);

}  // namespace bivseq
