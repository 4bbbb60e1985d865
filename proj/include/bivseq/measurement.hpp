#pragma once

#include <cstdint>

#include "bivseq/bit_sequence.hpp"
#include "bivseq/dyadic.hpp"

namespace bivseq {

//! Result of measuring a sequence: the sign of its first element, i.e.
//! whether the real number the sequence encodes is >= 1/2.
enum class Outcome : int { minus = -1, plus = +1 };

constexpr int outcome_value(Outcome o) { return static_cast<int>(o); }

Outcome measure(const BitSequence& s);

//! One Monte-Carlo figure. std_error is the sample standard deviation of the
//! per-trial values divided by sqrt(samples); seed reproduces the whole run.
struct StatReport {
    double estimate;
    double std_error;
    std::uint64_t samples;
    std::uint64_t seed;
};

//! Fraction of +1 outcomes of measure after the latitude map at `theta`,
//! over fresh random sequences (one per trial). Converges to
//! (1 + sin theta)/2. Thread count never changes the result.
StatReport born_estimate(double theta, std::uint64_t trials, std::uint64_t seed,
                         unsigned window_bits = 64, unsigned threads = 1);

//! Time evolution at angular rate omega from t_start to t_end, which raises
//! the quarter-turn operator to q = (2*omega/pi) * (t_end - t_start).
//! q must be dyadic: construction snaps it to the nearest k/2^n with
//! n <= 24 and throws NonDyadicExponent when none lies within 1e-9.
class EvolutionSpec {
  public:
    EvolutionSpec(double omega, double t_start, double t_end);

    double omega() const { return omega_; }
    double t_start() const { return t_start_; }
    double t_end() const { return t_end_; }
    const DyadicExponent& exponent() const { return exponent_; }

  private:
    double omega_, t_start_, t_end_;
    DyadicExponent exponent_;
};

BitSequence evolve(const EvolutionSpec& spec, const BitSequence& s);

//! The closed-form uncertainty relation at colatitude/longitude (colat,
//! lon): the product of the two spreads sin(colat) * sin(lon) equals
//! cos(colat'), the direction cosine of the transverse axis.
struct TrigUncertainty {
    double cos_colat_prime;  // sin(colat) * sin(lon)
    double colat_prime;      // acos of the above, in [0, pi]
};

TrigUncertainty uncertainty_trig(double colat, double lon);

//! Monte-Carlo counterpart: spreads are measured as output standard
//! deviations of the latitude map at latitude pi/2 - colat resp.
//! pi/2 - lon (longitudes past pi fold to 2*pi - lon, which has the same
//! |sin|), and the transverse mean at latitude pi/2 - colat_prime. Each of
//! the three runs one length-(trials + window - 1) sequence, so each report
//! carries `trials` samples. Expect sigma_colat * sigma_lon ~ |mu|.
struct UncertaintyReport {
    StatReport sigma_colat;
    StatReport sigma_lon;
    StatReport mu_colat_prime;
};

UncertaintyReport uncertainty_mc(double colat, double lon, std::uint64_t trials,
                                 std::uint64_t seed, unsigned window_bits = 64);

//! Fraction of fresh random sequences whose measurement flips under the
//! root of order `root_log2`. The root rewrites the leading element from
//! position 2^(root_log2+1) - 1, which a prefix observer cannot predict, so
//! the fraction sits at 1/2 for every order.
StatReport outcome_flip_estimate(unsigned root_log2, std::uint64_t trials,
                                 std::uint64_t seed, unsigned threads = 1);

}  // namespace bivseq
