#pragma once

#include <cstdint>

namespace bivseq {

//! Point on the unit sphere. theta is latitude in [-pi/2, pi/2]; lambda is
//! longitude, normalized into [0, 2*pi) on construction.
struct SpherePoint {
    SpherePoint(double theta, double lambda);

    double colatitude() const;  // pi/2 - theta, in [0, pi]

    double theta;
    double lambda;
};

//! Computable-state grid: N meridians lambda = 2*pi*n/N (n = 1..N) crossed
//! with latitudes theta = +-pi*m/(2N) (m = 0..N). Signed pairs with m = 0
//! describe the same point, so a meridian carries 2N+1 distinct latitudes
//! and the grid has N*(2N+1) points.
struct GridSpec {
    unsigned meridians;  // N >= 1
};

std::uint64_t grid_point_count(const GridSpec& spec);

//! Both candidate sines produced by re-expressing the grid point (m, n) in a
//! coordinate frame whose pole sits at latitude `pole_latitude` on the
//! lambda = 0 meridian:
//!
//!   sin theta' = cos(pi*m/2N) * cos(2*pi*n/N) * cos(pole_latitude)
//!                +- sin(pi*m/2N) * sin(pole_latitude)
//!
//! The + root is the image of the point at latitude +pi*m/2N and the - root
//! the image of its southern mirror; callers pick the root for their point.
//! pole_latitude = pi/2 keeps the frame unrotated.
struct RotatedLatitude {
    double sin_plus;
    double sin_minus;
    double theta_plus;
    double theta_minus;
};

RotatedLatitude rotate_latitude(unsigned m, unsigned n, const GridSpec& spec,
                                double pole_latitude);

//! Number of grid points that land back on a grid latitude after the frame
//! is tilted by `rotation` radians away from the identity (the pole moves to
//! latitude pi/2 - rotation along the lambda = 0 meridian). Matching
//! compares sines against the grid's sine table within `tolerance`.
//! rotation = 0 counts every point; a generic rotation leaves at most the
//! two equatorial fixed points of the tilt axis, and the count is invariant
//! under rotation -> -rotation.
std::uint64_t grid_overlap_count(const GridSpec& spec, double rotation,
                                 double tolerance = 1e-12);

//! Central angle between two points (spherical law of cosines).
double colatitude_between(const SpherePoint& p, const SpherePoint& q);

}  // namespace bivseq
