#pragma once

#include "bivseq/bit_sequence.hpp"
#include "bivseq/dyadic.hpp"

namespace bivseq {

//! The quarter-turn operator: every consecutive pair (a, b) becomes (-b, a).
//! Applied twice it flips every sign; four applications are the identity.
//! Throws LengthNotAligned unless the length is even.
BitSequence apply_i(const BitSequence& s);

//! The 2^n-th root of the quarter turn, acting on consecutive blocks of
//! 2^(n+1) elements. Within a block {a_1 .. a_B} (B = 2^(n+1)) the output is
//! the concatenation
//!
//!     {-a_B, a_{B-1}},  {a_{B-3}, a_{B-2}},  {a_{B-7} .. a_{B-4}},  ...,
//!     {a_1 .. a_{B/2}}
//!
//! i.e. the trailing pair reversed with one sign flip, then the pair before
//! it, then the preceding quadruplet, doubling up to the untouched leading
//! half. Applying it twice equals the root of order n-1; n = 0 is apply_i.
//! Throws LengthNotAligned unless the length is a multiple of 2^(n+1).
BitSequence apply_i_root(unsigned root_log2, const BitSequence& s);

//! The quarter turn raised to a dyadic exponent q = k/2^n: the k-fold
//! composition of the root of order n, evaluated by peeling the binary
//! digits of k so the cost is O(n) root applications instead of k.
//! Requires the length to be a multiple of 2^(n+1) for the reduced exponent.
BitSequence apply_i_power(const DyadicExponent& q, const BitSequence& s);

}  // namespace bivseq
