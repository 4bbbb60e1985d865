#pragma once

#include <stdexcept>
#include <string>

namespace bivseq {

// Base class for everything thrown by this library on bad input. Numeric
// preconditions that indicate caller bugs (out-of-range latitudes, zero
// window widths, ...) use the std exception types directly instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sequence operation was handed zero elements.
struct EmptyInput : Error {
    EmptyInput() : Error("sequence must contain at least one element") {}
};

// Sequence length is not a multiple of the operator's block size.
struct LengthNotAligned : Error {
    explicit LengthNotAligned(const std::string& what) : Error(what) {}
};

// An exponent that must be of the form k/2^n is not, or cannot be
// recovered from floating-point data within tolerance.
struct NonDyadicExponent : Error {
    explicit NonDyadicExponent(const std::string& what) : Error(what) {}
};

// The sequence is too short for the requested window.
struct SequenceTooShort : Error {
    explicit SequenceTooShort(const std::string& what) : Error(what) {}
};

// A two-component state whose squared amplitudes do not sum to 1.
struct UnnormalizedState : Error {
    explicit UnnormalizedState(const std::string& what) : Error(what) {}
};

// Wavenumbers must be strictly positive.
struct InvalidWavenumber : Error {
    explicit InvalidWavenumber(const std::string& what) : Error(what) {}
};

// Malformed or truncated sequence file.
struct FileFormatError : Error {
    explicit FileFormatError(const std::string& what) : Error(what) {}
};

}  // namespace bivseq
