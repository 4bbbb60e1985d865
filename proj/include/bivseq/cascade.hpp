#pragma once

#include <optional>
#include <vector>

namespace bivseq {

//! Octave-doubling cascade: level n lives at wavenumber 2^n * k_base and
//! turns over in tau(k) = k^(-(3+s)/2), where s is the spectral slope.
struct CascadeSpec {
    double spectral_slope = -5.0 / 3.0;
    double k_base = 1.0;    // > 0
    unsigned levels = 30;   // >= 1
};

//! tau(k) = k^(-(3+s)/2). Throws InvalidWavenumber for k <= 0.
double turnover_time(double k, double spectral_slope);

//! Total time through the first `levels` octaves: sum of tau(2^n * k_base)
//! for n = 0 .. levels-1, accumulated directly (the closed geometric form is
//! what tests compare against).
double omega_sum(const CascadeSpec& spec);

//! Limit of omega_sum as levels -> infinity: tau(k_base) / (1 - 2^-gamma)
//! with gamma = (3 + s)/2. Empty when gamma <= 0 (the sum diverges). While
//! finite, the remainder after N levels is tau(k_base) * 2^(-gamma*N) /
//! (1 - 2^-gamma), so convergence is geometric.
std::optional<double> omega_limit(const CascadeSpec& spec);

struct CascadeRow {
    unsigned level;
    double wavenumber;
    double turnover;
    double partial_sum;  // omega through this level inclusive
};

//! Per-level table, used by the report writers.
std::vector<CascadeRow> cascade_table(const CascadeSpec& spec);

}  // namespace bivseq
