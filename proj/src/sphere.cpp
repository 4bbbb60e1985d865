#include "bivseq/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bivseq {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

void validate(const GridSpec& spec) {
    if (spec.meridians == 0 || spec.meridians > 65536)
        throw std::invalid_argument("meridian count must be in [1, 65536]");
}
}  // namespace

SpherePoint::SpherePoint(double theta_, double lambda_)
    : theta(theta_), lambda(lambda_) {
    if (!(theta >= -kPi / 2 && theta <= kPi / 2))
        throw std::domain_error("latitude must lie in [-pi/2, pi/2]");
    lambda = std::fmod(lambda, 2 * kPi);
    if (lambda < 0) lambda += 2 * kPi;
}

double SpherePoint::colatitude() const { return kPi / 2 - theta; }

std::uint64_t grid_point_count(const GridSpec& spec) {
    validate(spec);
    const std::uint64_t n = spec.meridians;
    return n * (2 * n + 1);
}

namespace {
// The pole direction is (cos pole_latitude, 0, sin pole_latitude); angles
// outside [-pi/2, pi/2] still name a valid direction, which the overlap scan
// relies on for its rotation -> -rotation symmetry.
RotatedLatitude rotate_unchecked(unsigned m, unsigned n, unsigned N,
                                 double pole_latitude) {
    const double band = kPi * m / (2.0 * N);
    const double lon = 2.0 * kPi * n / N;
    const double c = std::cos(band) * std::cos(lon) * std::cos(pole_latitude);
    const double s = std::sin(band) * std::sin(pole_latitude);
    const double plus = clamp_unit(c + s);
    const double minus = clamp_unit(c - s);
    return RotatedLatitude{plus, minus, std::asin(plus), std::asin(minus)};
}
}  // namespace

RotatedLatitude rotate_latitude(unsigned m, unsigned n, const GridSpec& spec,
                                double pole_latitude) {
    validate(spec);
    const unsigned N = spec.meridians;
    if (m > N) throw std::invalid_argument("latitude index m must be <= N");
    if (n < 1 || n > N)
        throw std::invalid_argument("meridian index n must be in [1, N]");
    if (!(pole_latitude >= -kPi / 2 && pole_latitude <= kPi / 2))
        throw std::domain_error("pole latitude must lie in [-pi/2, pi/2]");
    return rotate_unchecked(m, n, N, pole_latitude);
}

std::uint64_t grid_overlap_count(const GridSpec& spec, double rotation,
                                 double tolerance) {
    validate(spec);
    const unsigned N = spec.meridians;
    const double pole_latitude = kPi / 2 - rotation;

    std::vector<double> sines(N + 1);
    for (unsigned mp = 0; mp <= N; ++mp) sines[mp] = std::sin(kPi * mp / (2.0 * N));

    const auto on_grid = [&](double sine) {
        const double a = std::fabs(sine);
        // sines[] is increasing; nearest entry decides
        const auto it = std::lower_bound(sines.begin(), sines.end(), a);
        if (it != sines.end() && *it - a <= tolerance) return true;
        return it != sines.begin() && a - *(it - 1) <= tolerance;
    };

    std::uint64_t count = 0;
    for (unsigned n = 1; n <= N; ++n) {
        for (unsigned m = 0; m <= N; ++m) {
            const RotatedLatitude r = rotate_unchecked(m, n, N, pole_latitude);
            if (on_grid(r.sin_plus)) ++count;             // northern point
            if (m != 0 && on_grid(r.sin_minus)) ++count;  // southern mirror
        }
    }
    return count;
}

double colatitude_between(const SpherePoint& p, const SpherePoint& q) {
    const double c = std::sin(p.theta) * std::sin(q.theta) +
                     std::cos(p.theta) * std::cos(q.theta) *
                         std::cos(p.lambda - q.lambda);
    return std::acos(clamp_unit(c));
}

}  // namespace bivseq
