#pragma once

// Internal entry point for the latitude operator with the threshold digits
// already packed (see threshold_words). The Monte-Carlo drivers compute the
// digits once per setting instead of once per trial; behavior is identical
// to apply_j by construction (the public function is this plus the digit
// computation).

#include <cstdint>
#include <span>

#include "bivseq/latitude.hpp"

namespace bivseq::detail {

LatitudeResult apply_j_words(std::span<const std::uint64_t> twords,
                             unsigned window_bits, const BitSequence& s);

}  // namespace bivseq::detail
