#include "bivseq/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bivseq/latitude.hpp"
#include "bivseq/rng.hpp"
#include "bits_detail.hpp"
#include "latitude_detail.hpp"
#include "trial_pool.hpp"

namespace bivseq {

namespace {

double correlated_latitude(double delta_theta) {
    return std::asin(std::clamp(std::cos(delta_theta), -1.0, 1.0));
}

// Everything after the first element, as its own sequence.
BitSequence drop_first(const BitSequence& s) {
    BitSequence tail(s.size() - 1);
    detail::copy_bits(tail.words().data(), 0, s.words().data(), 1,
                      s.size() - 1);
    tail.mask_tail();
    return tail;
}

PairSample sample_pair_words(std::span<const std::uint64_t> twords,
                             unsigned window_bits, std::uint64_t trial_seed) {
    SplitMix64 g(trial_seed);
    const BitSequence s = random_sequence(window_bits + 2, g);
    const Outcome first = measure(s);
    const LatitudeResult partner =
        detail::apply_j_words(twords, window_bits, drop_first(s));
    const int c = outcome_value(measure(partner.output));
    const int second = -outcome_value(first) * c;
    return PairSample{first, second > 0 ? Outcome::plus : Outcome::minus};
}

}  // namespace

PairSample sample_pair(double delta_theta, std::uint64_t trial_seed,
                       unsigned window_bits) {
    const ThresholdSpec spec{correlated_latitude(delta_theta), window_bits};
    return sample_pair_words(threshold_words(spec), window_bits, trial_seed);
}

StatReport correlation_estimate(const EprSpec& spec, unsigned threads) {
    if (spec.trials == 0) throw std::invalid_argument("trials must be positive");
    const ThresholdSpec tspec{correlated_latitude(spec.delta_theta),
                              spec.window_bits};
    const auto twords = threshold_words(tspec);

    const std::int64_t sum = detail::sum_over_trials(
        spec.trials, threads, [&](std::uint64_t t) -> std::int64_t {
            const PairSample p = sample_pair_words(
                twords, spec.window_bits, derive_seed(spec.seed, t));
            return outcome_value(p.first) * outcome_value(p.second);
        });

    const double est =
        static_cast<double>(sum) / static_cast<double>(spec.trials);
    const double sd = std::sqrt(std::max(0.0, 1.0 - est * est));
    return StatReport{est, sd / std::sqrt(static_cast<double>(spec.trials)),
                      spec.trials, spec.seed};
}

ChshReport bell_chsh_scan(const ChshSettings& settings, std::uint64_t trials,
                          std::uint64_t seed, unsigned window_bits,
                          unsigned threads) {
    const double pairs[4][2] = {
        {settings.a, settings.b},
        {settings.a, settings.b_prime},
        {settings.a_prime, settings.b},
        {settings.a_prime, settings.b_prime},
    };
    StatReport c[4];
    for (int i = 0; i < 4; ++i) {
        const EprSpec spec{std::fabs(pairs[i][0] - pairs[i][1]), trials,
                           derive_seed(seed, static_cast<std::uint64_t>(i)),
                           window_bits};
        c[i] = correlation_estimate(spec, threads);
    }

    const double s_value = std::fabs(c[0].estimate - c[1].estimate) +
                           std::fabs(c[2].estimate + c[3].estimate);
    double var = 0.0;
    for (const auto& r : c) var += r.std_error * r.std_error;
    const StatReport s{s_value, std::sqrt(var), 4 * trials, seed};
    return ChshReport{c[0], c[1], c[2], c[3], s};
}

}  // namespace bivseq
