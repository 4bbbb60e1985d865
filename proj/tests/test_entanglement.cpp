#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "bivseq/entanglement.hpp"
#include "bivseq/rng.hpp"

using bivseq::EprSpec;
using bivseq::Outcome;
using bivseq::outcome_value;
using bivseq::PairSample;

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

bool same_bits(double a, double b) {
    return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

TEST_CASE("aligned settings anti-correlate every single pair") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const PairSample p = bivseq::sample_pair(0.0, s);
        CHECK(outcome_value(p.second) == -outcome_value(p.first));
    }
}

TEST_CASE("opposite settings correlate every single pair") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const PairSample p = bivseq::sample_pair(kPi, s);
        CHECK(outcome_value(p.second) == outcome_value(p.first));
    }
}

TEST_CASE("correlation endpoints are exact") {
    const auto zero = bivseq::correlation_estimate(EprSpec{0.0, 2000, 8});
    CHECK(zero.estimate == -1.0);
    CHECK(zero.std_error == 0.0);
    CHECK(zero.samples == 2000);

    const auto pi = bivseq::correlation_estimate(EprSpec{kPi, 2000, 8});
    CHECK(pi.estimate == 1.0);
    CHECK(pi.std_error == 0.0);
}

TEST_CASE("correlation tracks minus cosine at interior angles") {
    for (double d : {kPi / 2, kPi / 3, 2 * kPi / 3}) {
        const auto r = bivseq::correlation_estimate(EprSpec{d, 20000, 4242});
        const double want = -std::cos(d);
        const double band =
            4.0 * std::sqrt((1.0 - want * want) / 20000.0) + 1e-9;
        CHECK(std::fabs(r.estimate - want) < band);
    }
}

TEST_CASE("both marginals stay fair away from the endpoints") {
    std::int64_t first_sum = 0, second_sum = 0;
    const std::uint64_t trials = 20000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const PairSample p =
            bivseq::sample_pair(kPi / 3, bivseq::derive_seed(777, t));
        first_sum += outcome_value(p.first);
        second_sum += outcome_value(p.second);
    }
    const double band = 4.0 / std::sqrt(static_cast<double>(trials));
    CHECK(std::fabs(static_cast<double>(first_sum) / trials) < band);
    CHECK(std::fabs(static_cast<double>(second_sum) / trials) < band);
}

TEST_CASE("correlation estimate is identical at any thread count") {
    const EprSpec spec{1.1, 6000, 99};
    const auto a = bivseq::correlation_estimate(spec, 1);
    const auto b = bivseq::correlation_estimate(spec, 4);
    const auto c = bivseq::correlation_estimate(spec, 13);
    CHECK(same_bits(a.estimate, b.estimate));
    CHECK(same_bits(a.estimate, c.estimate));
    CHECK(same_bits(a.std_error, b.std_error));
}

TEST_CASE("degenerate settings reach the classical bound exactly") {
    const bivseq::ChshSettings flat{0.0, 0.0, 0.0, 0.0};
    const auto r = bivseq::bell_chsh_scan(flat, 500, 3);
    CHECK(r.c_ab.estimate == -1.0);
    CHECK(r.c_ab_prime.estimate == -1.0);
    CHECK(r.c_a_prime_b.estimate == -1.0);
    CHECK(r.c_a_prime_b_prime.estimate == -1.0);
    CHECK(r.s.estimate == 2.0);
    CHECK(r.s.std_error == 0.0);
    CHECK(r.s.samples == 2000);
}

TEST_CASE("orthogonal settings also sit at the classical bound") {
    const bivseq::ChshSettings right{0.0, 0.0, kPi / 2, kPi / 2};
    const auto r = bivseq::bell_chsh_scan(right, 20000, 314159);
    CHECK(r.c_ab.estimate == -1.0);
    CHECK(r.c_a_prime_b_prime.estimate == -1.0);
    CHECK(std::fabs(r.s.estimate - 2.0) < 0.05);
}

TEST_CASE("chsh scan is identical at any thread count") {
    const bivseq::ChshSettings tuned{0.0, kPi / 4, kPi / 2, 3 * kPi / 4};
    const auto a = bivseq::bell_chsh_scan(tuned, 4000, 27, 64, 1);
    const auto b = bivseq::bell_chsh_scan(tuned, 4000, 27, 64, 6);
    CHECK(same_bits(a.s.estimate, b.s.estimate));
    CHECK(same_bits(a.c_ab.estimate, b.c_ab.estimate));
    CHECK(same_bits(a.c_a_prime_b.estimate, b.c_a_prime_b.estimate));
}
