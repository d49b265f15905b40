#include "qlsim/evolution.hpp"

#include <string>

namespace qlsim {

namespace {

// Real 4x4 scratch type for the homogeneous embedding.
struct Mat4 {
    std::array<double, 16> e{};
    double& operator()(int i, int j) { return e[i * 4 + j]; }
    double operator()(int i, int j) const { return e[i * 4 + j]; }

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
    Mat4 operator*(const Mat4& o) const {
        Mat4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
                m(i, j) = s;
            }
        return m;
    }
    Mat4 operator+(const Mat4& o) const {
        Mat4 m;
        for (int k = 0; k < 16; ++k) m.e[k] = e[k] + o.e[k];
        return m;
    }
    Mat4 operator*(double s) const {
        Mat4 m;
        for (int k = 0; k < 16; ++k) m.e[k] = e[k] * s;
        return m;
    }
    double one_norm() const {
        double best = 0.0;
        for (int j = 0; j < 4; ++j) {
            double col = 0.0;
            for (int i = 0; i < 4; ++i) col += std::abs((*this)(i, j));
            best = std::max(best, col);
        }
        return best;
    }
};

// Scaling and squaring with a fixed Taylor order; dimensions are tiny and
// the scaled norm is <= 0.5, so order 12 reaches ~1e-15.
Mat4 expm(Mat4 a) {
    int squarings = 0;
    while (a.one_norm() > 0.5) {
        a = a * 0.5;
        ++squarings;
    }
    Mat4 result = Mat4::identity();
    Mat4 term = Mat4::identity();
    for (int k = 1; k <= 12; ++k) {
        term = term * a * (1.0 / k);
        result = result + term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

}  // namespace

BlochVector euler_step(const AffineGenerator& g, const BlochVector& r, double dt) {
    if (!(dt > 0.0 && dt <= 1.0))
        throw UsageError("euler_step requires 0 < dt <= 1 (dt plays epsilon)");
    const Vec3 next = r.vec() + (g.m * r.vec() + g.b) * dt;
    try {
        return BlochVector(next);
    } catch (const InvalidStateError&) {
        throw StepTooLargeError(
            "Euler step left the Bloch ball (|r| = " +
                std::to_string(next.norm()) + "); decrease dt",
            0);
    }
}

Trajectory euler_trajectory(const AffineGenerator& g, const BlochVector& r0,
                            double dt, std::size_t n) {
    if (n < 1) throw UsageError("euler_trajectory requires n >= 1");
    Trajectory traj;
    traj.step = dt;
    traj.times.reserve(n + 1);
    traj.states.reserve(n + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(r0);
    BlochVector r = r0;
    for (std::size_t k = 1; k <= n; ++k) {
        try {
            r = euler_step(g, r, dt);
        } catch (const StepTooLargeError& e) {
            throw StepTooLargeError(std::string(e.what()) + " at step " +
                                        std::to_string(k),
                                    k);
        }
        traj.times.push_back(static_cast<double>(k) * dt);
        traj.states.push_back(r);
    }
    return traj;
}

AffineChannel exact_channel(const AffineGenerator& g, double t) {
    if (!(t >= 0.0)) throw UsageError("exact_channel requires t >= 0");
    Mat4 a;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) a(i, j) = g.m(i, j) * t;
        a(i, 3) = g.b[i] * t;
    }
    const Mat4 e = expm(a);
    AffineChannel c;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) c.m(i, j) = e(i, j);
        c.b[i] = e(i, 3);
    }
    return c;
}

AffineChannel compose_channels(const AffineChannel& a, const AffineChannel& b) {
    AffineChannel c;
    c.m = a.m * b.m;
    c.b = a.m * b.b + a.b;
    return c;
}

AffineGenerator estimate_generator(const AffineChannel& c, double t) {
    if (!(t > 0.0)) throw UsageError("estimate_generator requires t > 0");
    AffineGenerator g;
    g.m = (c.m - Mat3::identity()) * (1.0 / t);
    g.b = c.b * (1.0 / t);
    return g;
}

}  // namespace qlsim
