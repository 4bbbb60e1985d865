#include "bivseq/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bivseq/latitude.hpp"
#include "bivseq/operators.hpp"
#include "bivseq/rng.hpp"
#include "latitude_detail.hpp"
#include "trial_pool.hpp"

namespace bivseq {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;

StatReport binomial_report(std::uint64_t hits, std::uint64_t trials,
                           std::uint64_t seed) {
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    const double sd = std::sqrt(p * (1.0 - p));
    return StatReport{p, sd / std::sqrt(static_cast<double>(trials)), trials,
                      seed};
}
}  // namespace

Outcome measure(const BitSequence& s) {
    return s.bit(0) ? Outcome::plus : Outcome::minus;
}

StatReport born_estimate(double theta, std::uint64_t trials, std::uint64_t seed,
                         unsigned window_bits, unsigned threads) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    const ThresholdSpec spec{theta, window_bits};
    const auto twords = threshold_words(spec);

    const std::int64_t plus = detail::sum_over_trials(
        trials, threads, [&](std::uint64_t t) -> std::int64_t {
            SplitMix64 g(derive_seed(seed, t));
            const BitSequence s = random_sequence(window_bits + 1, g);
            const LatitudeResult r = detail::apply_j_words(twords, window_bits, s);
            return measure(r.output) == Outcome::plus ? 1 : 0;
        });
    return binomial_report(static_cast<std::uint64_t>(plus), trials, seed);
}

EvolutionSpec::EvolutionSpec(double omega, double t_start, double t_end)
    : omega_(omega), t_start_(t_start), t_end_(t_end), exponent_(0, 0) {
    const double q = (2.0 * omega / kPi) * (t_end - t_start);
    if (!std::isfinite(q)) throw NonDyadicExponent("exponent is not finite");
    double qm = std::fmod(q, 4.0);
    if (qm < 0) qm += 4.0;

    constexpr unsigned kMaxDenLog2 = 24;
    constexpr double kTol = 1e-9;
    for (unsigned n = 0; n <= kMaxDenLog2; ++n) {
        const double scaled = std::ldexp(qm, static_cast<int>(n));
        const auto k = static_cast<std::int64_t>(std::llround(scaled));
        if (std::fabs(qm - std::ldexp(static_cast<double>(k),
                                      -static_cast<int>(n))) <= kTol) {
            exponent_ = DyadicExponent(k, n);
            return;
        }
    }
    throw NonDyadicExponent(
        "evolution exponent " + std::to_string(q) +
        " is not k/2^n with n <= " + std::to_string(kMaxDenLog2));
}

BitSequence evolve(const EvolutionSpec& spec, const BitSequence& s) {
    return apply_i_power(spec.exponent(), s);
}

TrigUncertainty uncertainty_trig(double colat, double lon) {
    if (!(colat >= 0.0 && colat <= kPi))
        throw std::domain_error("colatitude must lie in [0, pi]");
    const double c = std::sin(colat) * std::sin(lon);
    return TrigUncertainty{c, std::acos(std::clamp(c, -1.0, 1.0))};
}

namespace {
// One spread/mean estimate: stats of the latitude map at `latitude` over a
// fresh sequence with exactly `trials` windows.
SequenceStats map_stats(double latitude, unsigned window_bits,
                        std::uint64_t trials, std::uint64_t stream_seed) {
    SplitMix64 g(stream_seed);
    const BitSequence s = random_sequence(trials + window_bits - 1, g);
    return latitude_stats(ThresholdSpec{latitude, window_bits}, s);
}
}  // namespace

UncertaintyReport uncertainty_mc(double colat, double lon, std::uint64_t trials,
                                 std::uint64_t seed, unsigned window_bits) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    const TrigUncertainty trig = uncertainty_trig(colat, lon);

    double lon_n = std::fmod(lon, 2 * kPi);
    if (lon_n < 0) lon_n += 2 * kPi;
    const double lon_fold = lon_n <= kPi ? lon_n : 2 * kPi - lon_n;

    const SequenceStats a =
        map_stats(kPi / 2 - colat, window_bits, trials, derive_seed(seed, 0));
    const SequenceStats b =
        map_stats(kPi / 2 - lon_fold, window_bits, trials, derive_seed(seed, 1));
    const SequenceStats c = map_stats(kPi / 2 - trig.colat_prime, window_bits,
                                      trials, derive_seed(seed, 2));

    const auto se = [](const SequenceStats& st) {
        return std::sqrt(st.variance / static_cast<double>(st.count));
    };
    return UncertaintyReport{
        StatReport{std::sqrt(a.variance), se(a), a.count, seed},
        StatReport{std::sqrt(b.variance), se(b), b.count, seed},
        StatReport{c.mean, se(c), c.count, seed},
    };
}

StatReport outcome_flip_estimate(unsigned root_log2, std::uint64_t trials,
                                 std::uint64_t seed, unsigned threads) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    const std::uint64_t block = std::uint64_t{1} << (root_log2 + 1);

    const std::int64_t flips = detail::sum_over_trials(
        trials, threads, [&](std::uint64_t t) -> std::int64_t {
            SplitMix64 g(derive_seed(seed, t));
            const BitSequence s = random_sequence(block, g);
            return measure(apply_i_root(root_log2, s)) != measure(s) ? 1 : 0;
        });
    return binomial_report(static_cast<std::uint64_t>(flips), trials, seed);
}

}  // namespace bivseq
