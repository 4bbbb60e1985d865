#include "bivseq/dirac.hpp"

#include <cmath>

#include "bivseq/errors.hpp"

namespace bivseq {

StateVector2 state_from_point(const SpherePoint& p) {
    const double half = p.colatitude() / 2;
    const double up = std::cos(half);
    const double down = std::sin(half);
    return StateVector2{up, 0.0, down * std::cos(p.lambda),
                        down * std::sin(p.lambda)};
}

double prob_up(const StateVector2& v) {
    const double n2 = v.norm_squared();
    if (std::fabs(n2 - 1.0) > 1e-9)
        throw UnnormalizedState("state norm^2 = " + std::to_string(n2));
    return v.up_re * v.up_re + v.up_im * v.up_im;
}

double singlet_correlation(double delta_theta) {
    return -std::cos(delta_theta);
}

}  // namespace bivseq
