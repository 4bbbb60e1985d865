#pragma once

#include <cstdint>

#include "bivseq/measurement.hpp"

namespace bivseq {

//! One correlated pair: the direct outcome of a fresh sequence and the
//! outcome inferred for its partner measured at a setting delta_theta away.
struct PairSample {
    Outcome first;
    Outcome second;
};

struct EprSpec {
    double delta_theta;  // relative setting angle, in [0, pi]
    std::uint64_t trials;
    std::uint64_t seed;
    unsigned window_bits = 64;
};

//! Draws one pair: `first` measures a fresh sequence; the partner channel
//! applies the latitude map at the correlated latitude asin(cos delta_theta)
//! to the remainder of the same sequence (everything after the measured
//! element) and measures that; `second` is minus first times the partner
//! outcome. At delta_theta = 0 the partner channel always fires +1, so
//! second = -first exactly; at pi it fires -1, so second = first.
PairSample sample_pair(double delta_theta, std::uint64_t trial_seed,
                       unsigned window_bits = 64);

//! Mean of first*second over spec.trials pairs (trial t is seeded from
//! derive_seed(spec.seed, t)). Converges to -cos(delta_theta); the two
//! marginals stay fair at every angle. Thread count never changes the
//! result.
StatReport correlation_estimate(const EprSpec& spec, unsigned threads = 1);

//! Detector settings, one pair per side.
struct ChshSettings {
    double a;
    double b;
    double a_prime;
    double b_prime;
};

//! The four correlations C(x, y) at |x - y| plus the combined figure
//! S = |C(a,b) - C(a,b')| + |C(a',b) + C(a',b')|.
//! Each correlation runs `trials` pairs on its own derived seed stream.
//! `s` is the headline report: estimate S, error propagated in quadrature,
//! samples 4*trials. At settings (0, pi/4, pi/2, 3*pi/4) S reaches
//! 2*sqrt(2); settings with all four angles equal give 2.
struct ChshReport {
    StatReport c_ab;
    StatReport c_ab_prime;
    StatReport c_a_prime_b;
    StatReport c_a_prime_b_prime;
    StatReport s;
};

ChshReport bell_chsh_scan(const ChshSettings& settings, std::uint64_t trials,
                          std::uint64_t seed, unsigned window_bits = 64,
                          unsigned threads = 1);

}  // namespace bivseq
