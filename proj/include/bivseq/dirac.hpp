#pragma once

#include "bivseq/sphere.hpp"

namespace bivseq {

//! Two-component state with complex amplitudes kept as real pairs.
struct StateVector2 {
    double up_re, up_im;
    double down_re, down_im;

    double norm_squared() const {
        return up_re * up_re + up_im * up_im + down_re * down_re +
               down_im * down_im;
    }
};

//! State pointing at the given sphere point: the up amplitude is
//! cos(colatitude/2) and the down amplitude is e^(i*lambda) *
//! sin(colatitude/2). Always unit norm.
StateVector2 state_from_point(const SpherePoint& p);

//! Squared magnitude of the up amplitude. Throws UnnormalizedState if the
//! state's norm is off unity by more than 1e-9. For state_from_point(p) this
//! equals (1 + sin(p.theta)) / 2, the closed form the sequence experiments
//! are checked against.
double prob_up(const StateVector2& v);

//! Two-particle zero-total-spin correlation of measurements whose settings
//! differ by delta_theta: -cos(delta_theta).
double singlet_correlation(double delta_theta);

}  // namespace bivseq
