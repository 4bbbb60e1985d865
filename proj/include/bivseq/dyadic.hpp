#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bivseq/errors.hpp"

namespace bivseq {

//! Exponent of the form k/2^n, kept canonical.
//!
//! The quarter-turn operator has period 4, so exponents are reduced modulo 4
//! into [0, 4) and then to lowest terms (numerator odd, or zero with n = 0).
//! After reduction the numerator is < 2^(n+2).
class DyadicExponent {
  public:
    // k may be negative or >= 4*2^n; it is reduced as described above.
    DyadicExponent(std::int64_t k, unsigned log2_denominator);

    // Accepts "k", "k/m" with m a power of two, or "k/2^n".
    static DyadicExponent parse(std::string_view text);

    std::uint64_t numerator() const { return num_; }
    unsigned log2_denominator() const { return den_log2_; }

    double value() const;
    std::string to_string() const;

    bool operator==(const DyadicExponent&) const = default;

  private:
    std::uint64_t num_;
    unsigned den_log2_;
};

}  // namespace bivseq
