#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "bivseq/bit_sequence.hpp"
#include "bivseq/latitude.hpp"
#include "bivseq/rng.hpp"

using bivseq::apply_j;
using bivseq::BitSequence;
using bivseq::threshold_bits;
using bivseq::ThresholdSpec;

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

// Digits most significant first, packed into one integer for comparison.
std::uint64_t digits_as_u64(const std::vector<int>& digits) {
    REQUIRE(digits.size() == 64);
    std::uint64_t acc = 0;
    for (int d : digits) acc = (acc << 1) | static_cast<unsigned>(d);
    return acc;
}

}  // namespace

TEST_CASE("threshold digits at pinned latitudes") {
    // Exact truncations of (1 - sin theta)/2 for the double nearest each
    // angle, frozen from an exact rational computation.
    CHECK(digits_as_u64(threshold_bits({0.0, 64})) ==
          9223372036854775808ull);  // t = 1/2
    CHECK(digits_as_u64(threshold_bits({kPi / 6, 64})) ==
          4611686018427388362ull);  // just above 1/4: sin(pi/6) != 0.5 exactly
    CHECK(digits_as_u64(threshold_bits({kPi / 4, 64})) ==
          2701463124188384901ull);
    CHECK(digits_as_u64(threshold_bits({-kPi / 3, 64})) ==
          17211046529326032829ull);
    CHECK(digits_as_u64(threshold_bits({-kPi / 2, 64})) ==
          18446744073709551615ull);  // t just below 1: all ones
    CHECK(digits_as_u64(threshold_bits({kPi / 2, 64})) == 0ull);
}

TEST_CASE("narrow windows are prefixes of wide ones") {
    for (double theta : {0.0, kPi / 6, kPi / 4, -kPi / 3, 0.9}) {
        const auto wide = threshold_bits({theta, 64});
        const auto narrow = threshold_bits({theta, 8});
        REQUIRE(narrow.size() == 8);
        for (int j = 0; j < 8; ++j) CHECK(narrow[j] == wide[j]);
    }
}

TEST_CASE("threshold_words packs digit j at bit j") {
    for (double theta : {kPi / 6, -kPi / 3, 0.37}) {
        const auto digits = bivseq::threshold_bits({theta, 64});
        const auto words = bivseq::threshold_words({theta, 64});
        REQUIRE(words.size() == 1);
        for (unsigned j = 0; j < 64; ++j)
            CHECK(((words[0] >> j) & 1u) == static_cast<unsigned>(digits[j]));
    }
    const auto wide = bivseq::threshold_words({0.37, 96});
    const auto digits = bivseq::threshold_bits({0.37, 96});
    REQUIRE(wide.size() == 2);
    for (unsigned j = 0; j < 96; ++j)
        CHECK(((wide[j >> 6] >> (j & 63)) & 1u) ==
              static_cast<unsigned>(digits[j]));
}

TEST_CASE("latitude and window bounds are validated") {
    CHECK_THROWS_AS(threshold_bits({1.6, 64}), std::domain_error);
    CHECK_THROWS_AS(threshold_bits({-3.2, 64}), std::domain_error);
    const double nan = std::nan("");
    CHECK_THROWS_AS(threshold_bits({nan, 64}), std::domain_error);
    CHECK_THROWS_AS(threshold_bits({0.0, 7}), std::invalid_argument);
    CHECK_THROWS_AS(threshold_bits({0.0, 1025}), std::invalid_argument);
    CHECK_NOTHROW(threshold_bits({0.0, 8}));
    CHECK_NOTHROW(threshold_bits({0.0, 1024}));
}

TEST_CASE("small worked comparison, window of eight") {
    // theta = 0: threshold digits 1 0 0 0 0 0 0 0, so a window wins
    // exactly when its first element is +1 (equality is the all-but-first
    // zero window, a tie).
    BitSequence in(9);
    in.set_sign(0, +1);
    const auto r = apply_j({0.0, 8}, in);
    REQUIRE(r.output.size() == 2);
    CHECK(r.output.sign(0) == +1);  // window 1 0000000 ties the threshold
    CHECK(r.output.sign(1) == -1);  // window 00000000 is below
    CHECK(r.tie_count == 1);
}

TEST_CASE("pole thresholds saturate the output") {
    BitSequence minus(70);  // all -1
    const auto north = apply_j({kPi / 2, 64}, minus);
    REQUIRE(north.output.size() == 7);
    CHECK(north.output.plus_count() == 7);  // everything >= all-zero digits
    CHECK(north.tie_count == 7);            // and every window ties exactly

    const BitSequence plus = bivseq::negate(minus);
    const auto south = apply_j({-kPi / 2, 64}, plus);
    CHECK(south.output.plus_count() == 7);  // all-ones windows tie all-ones
    CHECK(south.tie_count == 7);

    BitSequence gen(70);
    gen.set_sign(10, +1);
    const auto below = apply_j({-kPi / 2, 64}, gen);
    CHECK(below.output.plus_count() == 0);  // generic windows fall short
    CHECK(below.tie_count == 0);
}

TEST_CASE("input must be longer than the window") {
    CHECK_THROWS_AS(apply_j({0.0, 64}, BitSequence(64)),
                    bivseq::SequenceTooShort);
    CHECK_THROWS_AS(apply_j({0.0, 64}, BitSequence(10)),
                    bivseq::SequenceTooShort);
    CHECK_NOTHROW(apply_j({0.0, 64}, BitSequence(65)));
}

TEST_CASE("output length is one per full window") {
    bivseq::SplitMix64 g(41);
    const BitSequence s = bivseq::random_sequence(1000, g);
    CHECK(apply_j({0.3, 64}, s).output.size() == 1000 - 64 + 1);
    CHECK(apply_j({0.3, 128}, s).output.size() == 1000 - 128 + 1);
}

TEST_CASE("windows decide by their first difference from the threshold") {
    // threshold at theta = 0, w = 8 is 10000000; flip window digits around
    // it and check the lexicographic verdict
    const std::vector<int> win_above{1, 0, 0, 0, 0, 1, 0, 0, 0};
    const auto above =
        apply_j({0.0, 8}, BitSequence::from_real_bits(win_above));
    CHECK(above.output.sign(0) == +1);
    CHECK(above.tie_count == 0);

    const std::vector<int> win_below{0, 1, 1, 1, 1, 1, 1, 1, 1};
    const auto below =
        apply_j({0.0, 8}, BitSequence::from_real_bits(win_below));
    CHECK(below.output.sign(0) == -1);
}

TEST_CASE("output mean tracks sin theta on random input") {
    bivseq::SplitMix64 g(43);
    const BitSequence s = bivseq::random_sequence(40063, g);
    for (double theta : {0.0, kPi / 6, -kPi / 3}) {
        const auto st = bivseq::latitude_stats({theta, 64}, s);
        CHECK(st.count == 40000);
        // 40000 windows: iid sigma <= 0.005; allow for window overlap
        CHECK(std::fabs(st.mean - std::sin(theta)) < 0.05);
        CHECK(std::fabs(std::sqrt(st.variance) - std::fabs(std::cos(theta))) <
              0.05);
    }
}

TEST_CASE("latitude_stats matches stats of the mapped output") {
    bivseq::SplitMix64 g(47);
    const BitSequence s = bivseq::random_sequence(500, g);
    const ThresholdSpec spec{0.6, 64};
    const auto direct = bivseq::stats(apply_j(spec, s).output);
    const auto wrapped = bivseq::latitude_stats(spec, s);
    CHECK(direct.mean == wrapped.mean);
    CHECK(direct.variance == wrapped.variance);
    CHECK(direct.count == wrapped.count);
}
