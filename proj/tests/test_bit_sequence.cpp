#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "bivseq/bit_sequence.hpp"
#include "bivseq/rng.hpp"

using bivseq::BitSequence;

TEST_CASE("fresh sequence is all minus one") {
    BitSequence s(70);
    CHECK(s.size() == 70);
    for (std::uint64_t k = 0; k < s.size(); ++k) {
        CHECK(s.sign(k) == -1);
        CHECK_FALSE(s.bit(k));
    }
    CHECK(s.plus_count() == 0);
}

TEST_CASE("zero-length construction is rejected") {
    CHECK_THROWS_AS(BitSequence(0), bivseq::EmptyInput);
    CHECK_THROWS_AS(BitSequence::from_signs(std::vector<int>{}),
                    bivseq::EmptyInput);
    CHECK_THROWS_AS(BitSequence::from_real_bits(std::vector<int>{}),
                    bivseq::EmptyInput);
}

TEST_CASE("from_signs round trips") {
    const std::array<int, 9> signs{+1, -1, -1, +1, +1, +1, -1, -1, +1};
    const BitSequence s = BitSequence::from_signs(signs);
    REQUIRE(s.size() == signs.size());
    for (std::size_t k = 0; k < signs.size(); ++k) CHECK(s.sign(k) == signs[k]);
    CHECK(s.plus_count() == 5);
}

TEST_CASE("from_real_bits maps digits to signs") {
    const std::array<int, 3> digits{1, 0, 1};
    const BitSequence s = BitSequence::from_real_bits(digits);
    CHECK(s.sign(0) == +1);
    CHECK(s.sign(1) == -1);
    CHECK(s.sign(2) == +1);
}

TEST_CASE("set_sign and equality") {
    BitSequence a(5), b(5);
    CHECK(a == b);
    a.set_sign(3, +1);
    CHECK(a != b);
    b.set_sign(3, +1);
    CHECK(a == b);
    CHECK(a.sign(3) == +1);
    a.set_sign(3, -1);
    CHECK(a.sign(3) == -1);
}

TEST_CASE("negate flips every element and keeps the tail clean") {
    bivseq::SplitMix64 g(11);
    const BitSequence s = bivseq::random_sequence(100, g);
    const BitSequence n = bivseq::negate(s);
    REQUIRE(n.size() == s.size());
    for (std::uint64_t k = 0; k < s.size(); ++k) CHECK(n.sign(k) == -s.sign(k));
    // bits at positions >= size() must stay zero even though negation
    // complements whole words
    const std::uint64_t last = n.words().back();
    CHECK((last >> (100 & 63)) == 0);
    CHECK(bivseq::negate(n) == s);
}

TEST_CASE("stats: mean, variance, count") {
    const std::array<int, 4> signs{+1, +1, +1, -1};
    const auto st = bivseq::stats(BitSequence::from_signs(signs));
    CHECK(st.count == 4);
    CHECK(st.mean == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(st.variance == doctest::Approx(0.75).epsilon(1e-15));

    const auto all_plus =
        bivseq::stats(bivseq::negate(BitSequence(17)));
    CHECK(all_plus.mean == 1.0);
    CHECK(all_plus.variance == 0.0);
}

TEST_CASE("prefix_real brackets the encoded binary fraction") {
    // digits 1 0 1 -> [0.625, 0.75)
    const std::array<int, 3> signs{+1, -1, +1};
    const auto iv = bivseq::prefix_real(BitSequence::from_signs(signs));
    CHECK(iv.lo == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(iv.hi == doctest::Approx(0.75).epsilon(1e-15));

    const auto zero = bivseq::prefix_real(BitSequence(8));
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi == doctest::Approx(std::exp2(-8.0)).epsilon(1e-15));

    const auto ones = bivseq::prefix_real(bivseq::negate(BitSequence(8)));
    CHECK(ones.lo == doctest::Approx(1.0 - std::exp2(-8.0)).epsilon(1e-15));
    CHECK(ones.hi == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("mask_tail clears stray bits past the end") {
    BitSequence s(3);
    s.words()[0] = ~std::uint64_t{0};
    s.mask_tail();
    CHECK(s.words()[0] == 0b111u);
    CHECK(s.plus_count() == 3);
}

TEST_CASE("word layout: element k is bit k of the packed words") {
    BitSequence s(130);
    s.set_sign(0, +1);
    s.set_sign(64, +1);
    s.set_sign(129, +1);
    CHECK(s.words()[0] == 1u);
    CHECK(s.words()[1] == 1u);
    CHECK(s.words()[2] == (std::uint64_t{1} << 1));
}
