#include <doctest.h>

#include "qlsim/evolution.hpp"
#include "qlsim/random.hpp"

using namespace qlsim;

namespace {

AffineGenerator z_damping() {
    AffineGenerator g;
    g.m(0, 0) = g.m(1, 1) = -2.0;
    return g;
}

AffineGenerator z_rotation(double omega) {
    AffineGenerator g;
    g.m(0, 1) = -omega;
    g.m(1, 0) = omega;
    return g;
}

}  // namespace

TEST_CASE("euler_step reference values") {
    const BlochVector equator(1.0, 0.0, 0.0);

    CHECK(euler_step(AffineGenerator{}, equator, 0.3)
              .vec()
              .max_abs_diff(equator.vec()) == 0.0);

    const BlochVector stepped = euler_step(z_damping(), equator, 0.1);
    CHECK(stepped[0] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(stepped[1] == doctest::Approx(0.0));
    CHECK(stepped[2] == doctest::Approx(0.0));

    const BlochVector pole(0.0, 0.0, 1.0);
    for (double dt : {0.05, 0.5, 1.0})
        CHECK(euler_step(z_damping(), pole, dt).vec().max_abs_diff(pole.vec()) ==
              0.0);

    CHECK_THROWS_AS(euler_step(z_damping(), equator, 0.0), UsageError);
    CHECK_THROWS_AS(euler_step(z_damping(), equator, 1.5), UsageError);
}

TEST_CASE("euler_step rejects steps that leave the Bloch ball") {
    AffineGenerator expanding;
    expanding.m(0, 0) = 3.0;
    CHECK_THROWS_AS(euler_step(expanding, BlochVector(0.9, 0, 0), 1.0),
                    StepTooLargeError);
}

TEST_CASE("euler_trajectory follows the closed recursion") {
    const BlochVector r0(1.0, 0.0, 0.0);

    const Trajectory single = euler_trajectory(z_damping(), r0, 0.1, 1);
    CHECK(single.states.size() == 2);
    CHECK(single.states[1].vec().max_abs_diff(
              euler_step(z_damping(), r0, 0.1).vec()) == 0.0);

    const double dt = 0.01;
    const Trajectory traj = euler_trajectory(z_damping(), r0, dt, 100);
    REQUIRE(traj.times.size() == 101);
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        CHECK(traj.times[k] == doctest::Approx(dt * k).epsilon(1e-14));
        CHECK(traj.states[k][0] ==
              doctest::Approx(std::pow(1.0 - 2.0 * dt, k)).epsilon(1e-13));
    }

    // stays inside for any dt <= 0.5 on this generator since |1-2dt| <= 1
    CHECK_NOTHROW(euler_trajectory(z_damping(), r0, 0.5, 50));

    const auto step_error = [&] {
        AffineGenerator expanding;
        expanding.m(0, 0) = 3.0;
        try {
            euler_trajectory(expanding, BlochVector(0.5, 0, 0), 0.9, 10);
        } catch (const StepTooLargeError& e) {
            return e.step_index;
        }
        return std::size_t{0};
    }();
    CHECK(step_error > 0);
}

TEST_CASE("exact_channel reference values") {
    const AffineChannel id = exact_channel(z_damping(), 0.0);
    CHECK(id.m.max_abs_diff(Mat3::identity()) == 0.0);
    CHECK(id.b.norm() == 0.0);

    const AffineChannel damped = exact_channel(z_damping(), 1.0);
    Mat3 expected;
    expected(0, 0) = expected(1, 1) = std::exp(-2.0);
    expected(2, 2) = 1.0;
    CHECK(damped.m.max_abs_diff(expected) <= 1e-13);
    CHECK(damped.b.norm() <= 1e-15);

    const double omega = 1.3, t = 0.7;
    const AffineChannel rot = exact_channel(z_rotation(omega), t);
    Mat3 rz;
    rz(0, 0) = rz(1, 1) = std::cos(omega * t);
    rz(0, 1) = -std::sin(omega * t);
    rz(1, 0) = std::sin(omega * t);
    rz(2, 2) = 1.0;
    CHECK(rot.m.max_abs_diff(rz) <= 1e-13);

    CHECK_THROWS_AS(exact_channel(z_damping(), -0.1), UsageError);
}

TEST_CASE("compose_channels and the semigroup property") {
    Sampler s(107);

    const AffineChannel x{Mat3::identity() * 0.5, Vec3{{0.1, 0, 0}}};
    const AffineChannel composed = compose_channels(AffineChannel{}, x);
    CHECK(composed.m.max_abs_diff(x.m) == 0.0);
    CHECK(composed.b.max_abs_diff(x.b) == 0.0);

    double err = 0.0;
    for (int k = 0; k < 200; ++k) {
        const AffineGenerator g = affine_from_gks(s.gks());
        const double t1 = s.uniform(0.0, 1.0);
        const double t2 = s.uniform(0.0, 1.0);
        const AffineChannel lhs =
            compose_channels(exact_channel(g, t1), exact_channel(g, t2));
        const AffineChannel rhs = exact_channel(g, t1 + t2);
        err = std::max({err, lhs.m.max_abs_diff(rhs.m), lhs.b.max_abs_diff(rhs.b)});
    }
    CHECK(err <= 1e-9);

    // associativity
    for (int k = 0; k < 100; ++k) {
        const AffineChannel a = exact_channel(affine_from_gks(s.gks()), 0.4);
        const AffineChannel b = exact_channel(affine_from_gks(s.gks()), 0.2);
        const AffineChannel c = exact_channel(affine_from_gks(s.gks()), 0.7);
        const AffineChannel left = compose_channels(compose_channels(a, b), c);
        const AffineChannel right = compose_channels(a, compose_channels(b, c));
        CHECK(left.m.max_abs_diff(right.m) <= 1e-12);
        CHECK(left.b.max_abs_diff(right.b) <= 1e-12);
    }
}

TEST_CASE("unital generators yield unital channels") {
    Sampler s(109);
    for (int k = 0; k < 100; ++k) {
        GksForm g = s.gks();
        // keep only the real part of C: unital by construction
        CMat3 real_c;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) real_c(i, j) = g.c.mat()(i, j).real();
        g.c = GksMatrix(real_c);
        const AffineChannel c =
            exact_channel(affine_from_gks(g), s.uniform(0.0, 2.0));
        CHECK(c.b.norm() <= 1e-12);
    }
}

TEST_CASE("channels from valid generators map states to states") {
    Sampler s(113);
    for (int k = 0; k < 200; ++k) {
        const AffineChannel c =
            exact_channel(affine_from_gks(s.gks()), s.uniform(0.0, 3.0));
        const Vec3 out = c.apply(s.bloch_ball());
        // density_from_bloch re-validates PSD
        CHECK_NOTHROW(density_from_bloch(BlochVector(out)));
    }
}

TEST_CASE("estimate_generator converges at first order") {
    CHECK(estimate_generator(AffineChannel{}, 0.5).m.max_abs() == 0.0);
    CHECK_THROWS_AS(estimate_generator(AffineChannel{}, 0.0), UsageError);

    const AffineGenerator g = z_damping();
    const AffineGenerator est = estimate_generator(exact_channel(g, 1e-4), 1e-4);
    CHECK(est.m.max_abs_diff(g.m) <= 1e-3);

    const auto err_at = [&](double t) {
        const AffineGenerator e = estimate_generator(exact_channel(g, t), t);
        return e.m.max_abs_diff(g.m);
    };
    const double ratio = err_at(2e-3) / err_at(1e-3);
    CHECK(ratio == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("euler first-order convergence on z phase damping") {
    const BlochVector r0(1.0, 0.0, 0.0);
    const double exact = std::exp(-2.0);
    std::vector<double> errors;
    for (double dt : {0.1, 0.05, 0.025, 0.0125}) {
        const auto n = static_cast<std::size_t>(std::llround(1.0 / dt));
        const Trajectory t = euler_trajectory(z_damping(), r0, dt, n);
        errors.push_back(std::abs(t.states.back()[0] - exact));
    }
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        const double order = std::log2(errors[i] / errors[i + 1]);
        CHECK(order >= 0.9);
        CHECK(order <= 1.1);
    }
}
