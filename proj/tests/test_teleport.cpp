#include <doctest.h>

#include "qlsim/random.hpp"

using namespace qlsim;

namespace {
const std::array<cxd, 3> kAlphaX = {cxd{1.0, 0.0}, cxd{}, cxd{}};
const std::array<cxd, 3> kAlphaZ = {cxd{}, cxd{}, cxd{1.0, 0.0}};
}  // namespace

TEST_CASE("bell basis as printed") {
    const auto& b = bell_basis();
    const double s = std::numbers::sqrt2 / 2.0;

    CHECK(std::abs(b[0][1] - s) <= 1e-15);
    CHECK(std::abs(b[0][2] + s) <= 1e-15);
    CHECK(std::abs(b[2][0] - s) <= 1e-15);
    CHECK(std::abs(b[2][3] - s) <= 1e-15);

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const cxd overlap = b[i].dot(b[j]);
            CHECK(std::abs(overlap - (i == j ? cxd{1.0, 0.0} : cxd{})) <=
                  1e-15);
        }
}

TEST_CASE("teleport_program_ket") {
    const CVec4 pure = teleport_program_ket(BellProgram(0.0, kAlphaX));
    double diff = 0.0;
    for (int k = 0; k < 4; ++k)
        diff = std::max(diff, std::abs(pure[k] - bell_basis()[0][k]));
    CHECK(diff == 0.0);

    const CVec4 b1 = teleport_program_ket(BellProgram(1.0, kAlphaX));
    diff = 0.0;
    for (int k = 0; k < 4; ++k)
        diff = std::max(diff, std::abs(b1[k] - bell_basis()[1][k]));
    CHECK(diff <= 1e-15);

    Sampler s(83);
    for (int k = 0; k < 200; ++k)
        CHECK(teleport_program_ket(s.bell_program()).norm() ==
              doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(BellProgram(0.5, std::array<cxd, 3>{cxd{1, 0}, cxd{1, 0}}),
                    UsageError);
    CHECK_THROWS_AS(BellProgram(2.0, kAlphaX), UsageError);
}

TEST_CASE("teleport_channel_closed reference values") {
    const DensityMatrix zero = DensityMatrix::basis_state(0);

    CHECK(teleport_channel_closed(BellProgram(0.0, kAlphaX), zero)
              .mat()
              .max_abs_diff(zero.mat()) == 0.0);

    CHECK(teleport_channel_closed(BellProgram(1.0, kAlphaX), zero)
              .mat()
              .max_abs_diff(DensityMatrix::basis_state(1).mat()) == 0.0);

    const double third = 1.0 / std::sqrt(3.0);
    const std::array<cxd, 3> iso = {cxd{third, 0}, cxd{third, 0}, cxd{third, 0}};
    const BlochVector out =
        bloch_from_density(teleport_channel_closed(BellProgram(1.0, iso), zero));
    CHECK(out[0] == doctest::Approx(0.0));
    CHECK(out[1] == doctest::Approx(0.0));
    CHECK(out[2] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("teleport oracle equals the closed form") {
    Sampler s(89);
    double err = 0.0;
    for (int k = 0; k < 500; ++k) {
        const BellProgram p = s.bell_program();
        const DensityMatrix rho = s.density();
        err = std::max(err,
                       teleport_channel_oracle(p, rho).mat().max_abs_diff(
                           teleport_channel_closed(p, rho).mat()));
    }
    CHECK(err <= 1e-11);
}

TEST_CASE("epsilon zero teleports with fidelity one") {
    Sampler s(97);
    for (int k = 0; k < 100; ++k) {
        const DensityMatrix rho = s.density();
        CHECK(teleport_channel_oracle(BellProgram(0.0, s.alpha()), rho)
                  .mat()
                  .max_abs_diff(rho.mat()) <= 1e-12);
    }
}

TEST_CASE("alpha phases do not affect the channel") {
    Sampler s(101);
    for (int k = 0; k < 100; ++k) {
        BellProgram p = s.bell_program();
        const DensityMatrix rho = s.density();
        const CMat2 base_closed = teleport_channel_closed(p, rho).mat();
        const CMat2 base_oracle = teleport_channel_oracle(p, rho).mat();
        std::array<cxd, 3> rotated = p.alpha;
        for (auto& a : rotated) a *= std::polar(1.0, s.uniform(0.0, 6.28));
        const BellProgram q(p.epsilon, rotated);
        CHECK(teleport_channel_closed(q, rho).mat().max_abs_diff(base_closed) <=
              1e-12);
        CHECK(teleport_channel_oracle(q, rho).mat().max_abs_diff(base_oracle) <=
              1e-12);
    }
}

TEST_CASE("teleport_generator reference values") {
    Mat3 z_damp;
    z_damp(0, 0) = z_damp(1, 1) = -2.0;
    CHECK(teleport_generator(kAlphaZ).m.max_abs_diff(z_damp) == 0.0);

    const double third = 1.0 / std::sqrt(3.0);
    const std::array<cxd, 3> iso = {cxd{third, 0}, cxd{third, 0}, cxd{third, 0}};
    CHECK(teleport_generator(iso).m.max_abs_diff(
              Mat3::identity() * (-4.0 / 3.0)) <= 1e-15);
}

TEST_CASE("teleport_gks and generator consistency") {
    CMat3 x_damp;
    x_damp(0, 0) = 1.0;
    CHECK(teleport_gks(kAlphaX).mat().max_abs_diff(x_damp) == 0.0);
    CHECK(teleport_gks(kAlphaX).rank() == 1);

    Sampler s(103);
    for (int k = 0; k < 300; ++k) {
        const auto alpha = s.alpha();
        const GksForm g = gks_from_affine(teleport_generator(alpha));
        CHECK(g.h.norm() <= 1e-12);
        CHECK(g.c.mat().max_abs_diff(teleport_gks(alpha).mat()) <= 1e-10);
        CHECK(g.c.is_real(1e-12));
        CHECK(teleport_gks(alpha).mat().trace().real() ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(is_unital(teleport_generator(alpha)));
    }
}
