#pragma once

#include <cstdint>
#include <random>

#include "qlsim/processor.hpp"
#include "qlsim/teleport.hpp"

namespace qlsim {

/// Seeded sampler used by the verification suite and the property tests.
/// One PRNG (mt19937_64), fixed draw order, so runs are reproducible.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    /// Uniform in the closed unit ball, by rejection from the cube.
    Vec3 bloch_ball() {
        while (true) {
            Vec3 v{{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)}};
            if (v.norm() <= 1.0) return v;
        }
    }

    BlochVector state() { return BlochVector(bloch_ball()); }
    DensityMatrix density() { return density_from_bloch(state()); }

    EulerAngles euler() {
        const double two_pi = 2.0 * std::numbers::pi;
        return EulerAngles(uniform(0.0, two_pi), uniform(0.0, two_pi),
                           uniform(0.0, two_pi));
    }

    Mat3 rotation() { return adjoint_rotation(euler()); }

    cxd complex_unit_disk() {
        while (true) {
            cxd z{uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (std::abs(z) <= 1.0) return z;
        }
    }

    /// Random valid GksForm: h uniform in [-1,1]^3, C = B^dag B with B
    /// uniform entries (Hermitian PSD by construction), scaled to trace <= 1.
    GksForm gks() {
        GksForm g;
        for (int i = 0; i < 3; ++i) g.h[i] = uniform(-1.0, 1.0);
        CMat3 b;
        for (auto& z : b.e) z = complex_unit_disk();
        CMat3 c = b.dagger() * b;
        const double tr = c.trace().real();
        if (tr > 1.0) c = c * cxd{1.0 / tr, 0.0};
        // scrub the numerically antihermitian residue
        g.c = GksMatrix((c + c.dagger()) * cxd{0.5, 0.0});
        return g;
    }

    /// Arbitrary finite affine map, not necessarily Markovian.
    AffineGenerator affine() {
        AffineGenerator a;
        for (auto& x : a.m.e) x = uniform(-1.0, 1.0);
        for (auto& x : a.b.e) x = uniform(-1.0, 1.0);
        return a;
    }

    std::array<cxd, 3> alpha() {
        std::array<cxd, 3> a;
        double n2 = 0.0;
        do {
            n2 = 0.0;
            for (auto& z : a) {
                z = complex_unit_disk();
                n2 += std::norm(z);
            }
        } while (n2 < 1e-6);
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& z : a) z *= inv;
        return a;
    }

    BellProgram bell_program() { return BellProgram(uniform(0.0, 1.0), alpha()); }

  private:
    std::mt19937_64 rng_;
};

}  // namespace qlsim
