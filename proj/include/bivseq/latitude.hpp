#pragma once

#include <cstdint>
#include <vector>

#include "bivseq/bit_sequence.hpp"

namespace bivseq {

//! Latitude map parameters: a latitude on the unit sphere plus the window
//! width used to compare binary tails against the latitude's threshold.
struct ThresholdSpec {
    double theta;               // latitude, in [-pi/2, pi/2]
    unsigned window_bits = 64;  // 8 .. 1024
};

//! First `window_bits` binary digits of t = (1 - sin theta)/2, most
//! significant first, truncated (never rounded). Computed with 32 guard bits
//! of extended precision so every returned digit is the digit of the
//! extended value.
std::vector<int> threshold_bits(const ThresholdSpec& spec);

//! The same digits packed in element order: digit j at bit j-1 of the
//! word array (the layout BitSequence uses), ready for windowed XOR compares.
std::vector<std::uint64_t> threshold_words(const ThresholdSpec& spec);

struct LatitudeResult {
    BitSequence output;
    std::uint64_t tie_count;  // windows exactly equal to the threshold digits
};

//! The latitude operator: output element k is +1 when the window of
//! `window_bits` digits starting at input element k is lexicographically >=
//! the threshold digits, else -1. Equality is a tie, resolved to +1 and
//! counted. The input must be strictly longer than the window; the output
//! has size() - window_bits + 1 elements, one per full window.
//!
//! For uniformly random input each output element is +1 with probability
//! sin(theta)/2 + 1/2 up to 2^-window_bits, so the output mean estimates
//! sin(theta) and the output standard deviation estimates |cos(theta)|.
LatitudeResult apply_j(const ThresholdSpec& spec, const BitSequence& s);

//! stats() of apply_j(spec, s).output.
SequenceStats latitude_stats(const ThresholdSpec& spec, const BitSequence& s);

}  // namespace bivseq
