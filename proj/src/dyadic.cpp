#include "bivseq/dyadic.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace bivseq {

namespace {
constexpr unsigned kMaxLog2Den = 57;  // keeps 4*2^n inside int64

std::int64_t parse_int(std::string_view text) {
    std::int64_t v = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw NonDyadicExponent("cannot parse integer '" + std::string(text) + "'");
    return v;
}
}  // namespace

DyadicExponent::DyadicExponent(std::int64_t k, unsigned log2_denominator)
    : num_(0), den_log2_(log2_denominator) {
    if (den_log2_ > kMaxLog2Den)
        throw NonDyadicExponent("denominator exponent too large");
    const std::int64_t period = std::int64_t{4} << den_log2_;
    std::int64_t r = k % period;
    if (r < 0) r += period;
    num_ = static_cast<std::uint64_t>(r);
    if (num_ == 0) {
        den_log2_ = 0;
        return;
    }
    const unsigned twos = std::countr_zero(num_);
    const unsigned strip = twos < den_log2_ ? twos : den_log2_;
    num_ >>= strip;
    den_log2_ -= strip;
}

DyadicExponent DyadicExponent::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return DyadicExponent(parse_int(text), 0);

    const std::int64_t k = parse_int(text.substr(0, slash));
    std::string_view den = text.substr(slash + 1);
    if (den.starts_with("2^")) {
        const std::int64_t n = parse_int(den.substr(2));
        if (n < 0 || n > static_cast<std::int64_t>(kMaxLog2Den))
            throw NonDyadicExponent("denominator exponent out of range");
        return DyadicExponent(k, static_cast<unsigned>(n));
    }
    const std::int64_t m = parse_int(den);
    if (m <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(m)))
        throw NonDyadicExponent("denominator " + std::string(den) +
                                " is not a power of two");
    return DyadicExponent(k, static_cast<unsigned>(
                                 std::countr_zero(static_cast<std::uint64_t>(m))));
}

double DyadicExponent::value() const {
    return static_cast<double>(num_) * std::exp2(-static_cast<double>(den_log2_));
}

std::string DyadicExponent::to_string() const {
    if (den_log2_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(std::uint64_t{1} << den_log2_);
}

}  // namespace bivseq
