#include "bivseq/latitude.hpp"

#include <mpfr.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bits_detail.hpp"
#include "latitude_detail.hpp"

namespace bivseq {

namespace {

constexpr unsigned kMinWindow = 8;
constexpr unsigned kMaxWindow = 1024;
constexpr unsigned kGuardBits = 32;

void validate(const ThresholdSpec& spec) {
    constexpr double half_pi = std::numbers::pi_v<double> / 2;
    if (!(spec.theta >= -half_pi && spec.theta <= half_pi))
        throw std::domain_error("latitude must lie in [-pi/2, pi/2]");
    if (spec.window_bits < kMinWindow || spec.window_bits > kMaxWindow)
        throw std::invalid_argument("window_bits must be in [8, 1024]");
}

// Digits of t = (1 - sin theta)/2 as a big integer floor(t * 2^w), exported
// little-endian into 64-bit limbs (limb 0 = least significant digits).
std::vector<std::uint64_t> threshold_limbs(const ThresholdSpec& spec) {
    const unsigned w = spec.window_bits;
    mpfr_t t;
    mpfr_init2(t, w + kGuardBits);
    mpfr_set_d(t, spec.theta, MPFR_RNDN);
    mpfr_sin(t, t, MPFR_RNDN);
    mpfr_ui_sub(t, 1, t, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    mpfr_mul_2ui(t, t, w, MPFR_RNDN);

    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, t, MPFR_RNDZ);  // truncation, never rounding
    mpfr_clear(t);

    // sin can round to exactly +-1 at the poles even though the exact value
    // at a representable theta never reaches it; the exact t then sits just
    // below 1, whose first w digits are all ones. Clamp so the export below
    // stays within w bits.
    if (mpz_tstbit(z, w)) {
        mpz_set_ui(z, 1);
        mpz_mul_2exp(z, z, w);
        mpz_sub_ui(z, z, 1);
    }

    std::vector<std::uint64_t> limbs((w + 63) / 64, 0);
    std::size_t count = 0;
    mpz_export(limbs.data(), &count, -1, sizeof(std::uint64_t), 0, 0, z);
    mpz_clear(z);
    return limbs;
}

}  // namespace

std::vector<int> threshold_bits(const ThresholdSpec& spec) {
    validate(spec);
    const unsigned w = spec.window_bits;
    const auto limbs = threshold_limbs(spec);
    std::vector<int> digits(w);
    for (unsigned j = 0; j < w; ++j) {
        // digit j (0-based, most significant first) is integer bit w-1-j
        const unsigned bit = w - 1 - j;
        digits[j] = static_cast<int>((limbs[bit >> 6] >> (bit & 63)) & 1u);
    }
    return digits;
}

std::vector<std::uint64_t> threshold_words(const ThresholdSpec& spec) {
    validate(spec);
    const unsigned w = spec.window_bits;
    const auto limbs = threshold_limbs(spec);
    std::vector<std::uint64_t> words((w + 63) / 64, 0);
    for (unsigned j = 0; j < w; ++j) {
        const unsigned bit = w - 1 - j;  // integer bit of digit j
        if ((limbs[bit >> 6] >> (bit & 63)) & 1u)
            words[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
    return words;
}

namespace detail {

LatitudeResult apply_j_words(std::span<const std::uint64_t> twords,
                             unsigned window_bits, const BitSequence& s) {
    const unsigned w = window_bits;
    if (s.size() <= w)
        throw SequenceTooShort("latitude map needs more than " +
                               std::to_string(w) + " elements, got " +
                               std::to_string(s.size()));

    const std::uint64_t out_len = s.size() - w + 1;
    BitSequence out(out_len);
    auto* dst = out.words().data();

    // Sentinel word so 64-bit reads never run off the source array.
    std::vector<std::uint64_t> src(s.words().begin(), s.words().end());
    src.push_back(0);

    const unsigned chunks = (w + 63) / 64;
    const std::uint64_t last_mask =
        (w & 63) ? (std::uint64_t{1} << (w & 63)) - 1 : ~std::uint64_t{0};

    std::uint64_t ties = 0;
    for (std::uint64_t p = 0; p < out_len; ++p) {
        int d = 0;  // 0 = tie so far
        for (unsigned c = 0; c < chunks; ++c) {
            std::uint64_t win = detail::read64(src.data(), p + 64ull * c);
            if (c == chunks - 1) win &= last_mask;
            const std::uint64_t x = win ^ twords[c];
            if (x != 0) {
                // first differing element decides; the window wins iff the
                // threshold digit there is 0
                const unsigned j = std::countr_zero(x);
                d = ((twords[c] >> j) & 1u) ? -1 : +1;
                break;
            }
        }
        if (d == 0) {
            ++ties;
            d = +1;
        }
        if (d > 0) dst[p >> 6] |= std::uint64_t{1} << (p & 63);
    }
    return LatitudeResult{std::move(out), ties};
}

}  // namespace detail

LatitudeResult apply_j(const ThresholdSpec& spec, const BitSequence& s) {
    validate(spec);
    return detail::apply_j_words(threshold_words(spec), spec.window_bits, s);
}

SequenceStats latitude_stats(const ThresholdSpec& spec, const BitSequence& s) {
    return stats(apply_j(spec, s).output);
}

}  // namespace bivseq
