#pragma once

#include <vector>

#include "qlsim/generator.hpp"

namespace qlsim {

/// Finite-time affine map r -> m r + b on Bloch space.
struct AffineChannel {
    Mat3 m = Mat3::identity();
    Vec3 b{};

    Vec3 apply(const Vec3& r) const { return m * r + b; }
};

/// Equidistant Euler samples of a Bloch trajectory.
struct Trajectory {
    std::vector<double> times;
    std::vector<BlochVector> states;
    double step = 0.0;
};

/// One explicit Euler step r + (m r + b) dt. Throws StepTooLargeError when
/// the result leaves the closed unit ball; a clipped value would silently
/// misrepresent the discretized dynamics.
BlochVector euler_step(const AffineGenerator& g, const BlochVector& r, double dt);

/// n steps of size dt starting from r0; samples at 0, dt, ..., n*dt.
Trajectory euler_trajectory(const AffineGenerator& g, const BlochVector& r0,
                            double dt, std::size_t n);

/// Affine map of exp(L t) via the homogeneous 4x4 embedding [[m, b],[0, 0]],
/// exponentiated by scaling and squaring (Taylor order 12, 1-norm <= 0.5).
AffineChannel exact_channel(const AffineGenerator& g, double t);

/// (a o b)(r) = a(b(r)).
AffineChannel compose_channels(const AffineChannel& a, const AffineChannel& b);

/// First-order finite-difference estimate ((M_t - I)/t, b_t/t); error O(t).
AffineGenerator estimate_generator(const AffineChannel& c, double t);

}  // namespace qlsim
