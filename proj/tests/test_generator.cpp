#include <doctest.h>

#include "qlsim/generator.hpp"
#include "qlsim/random.hpp"

using namespace qlsim;

namespace {

Vec3 bloch_of(const CMat2& traceless) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = (traceless * pauli(i + 1)).trace().real();
    return r;
}

GksForm z_damping() {
    CMat3 c;
    c(2, 2) = 1.0;
    GksForm g;
    g.c = GksMatrix(c);
    return g;
}

DensityMatrix plus_state() {
    return density_from_bloch(BlochVector(1.0, 0.0, 0.0));
}

}  // namespace

TEST_CASE("apply_generator reference values") {
    const DensityMatrix plus = plus_state();

    SUBCASE("null generator") {
        CHECK(apply_generator(GksForm{}, plus).max_abs() == 0.0);
    }
    SUBCASE("pure Hamiltonian rotation about z") {
        const double omega = 1.7;
        GksForm g;
        g.h = {{0.0, 0.0, omega}};
        const Vec3 image = bloch_of(apply_generator(g, plus));
        CHECK(image[0] == doctest::Approx(0.0));
        CHECK(image[1] == doctest::Approx(omega).epsilon(1e-12));
        CHECK(image[2] == doctest::Approx(0.0));
    }
    SUBCASE("z phase damping on the equator") {
        const Vec3 image = bloch_of(apply_generator(z_damping(), plus));
        CHECK(image[0] == doctest::Approx(-2.0).epsilon(1e-12));
        CHECK(image[1] == doctest::Approx(0.0));
        CHECK(image[2] == doctest::Approx(0.0));
    }
}

TEST_CASE("apply_generator output is traceless Hermitian") {
    Sampler s(3);
    for (int k = 0; k < 300; ++k) {
        const CMat2 out = apply_generator(s.gks(), s.density());
        CHECK(std::abs(out.trace()) <= 1e-11);
        CHECK(out.is_hermitian(1e-11));
    }
}

TEST_CASE("affine_from_gks reference values") {
    SUBCASE("z phase damping") {
        const AffineGenerator a = affine_from_gks(z_damping());
        Mat3 expected;
        expected(0, 0) = expected(1, 1) = -2.0;
        CHECK(a.m.max_abs_diff(expected) == 0.0);
        CHECK(a.b.norm() == 0.0);
    }
    SUBCASE("pure Hamiltonian") {
        const double omega = 0.9;
        GksForm g;
        g.h = {{0.0, 0.0, omega}};
        const AffineGenerator a = affine_from_gks(g);
        Mat3 expected;
        expected(0, 1) = -omega;
        expected(1, 0) = omega;
        CHECK(a.m.max_abs_diff(expected) == 0.0);
        CHECK(a.b.norm() == 0.0);
    }
    SUBCASE("sigma-minus block gives amplitude damping") {
        CMat3 c;
        c(0, 0) = c(1, 1) = 0.5;
        c(0, 1) = cxd{0.0, 0.5};
        c(1, 0) = cxd{0.0, -0.5};
        GksForm g;
        g.c = GksMatrix(c);
        const AffineGenerator a = affine_from_gks(g);
        Mat3 expected;
        expected(0, 0) = expected(1, 1) = -1.0;
        expected(2, 2) = -2.0;
        CHECK(a.m.max_abs_diff(expected) <= 1e-15);
        CHECK(a.b[0] == doctest::Approx(0.0));
        CHECK(a.b[1] == doctest::Approx(0.0));
        CHECK(a.b[2] == doctest::Approx(-2.0));
    }
}

TEST_CASE("gks_from_affine reference values") {
    SUBCASE("isotropic contraction") {
        AffineGenerator a;
        a.m(0, 0) = a.m(1, 1) = a.m(2, 2) = -1.0;
        const GksForm g = gks_from_affine(a);
        CHECK(g.h.norm() == 0.0);
        CHECK(g.c.mat().max_abs_diff(CMat3::identity() * cxd{0.25, 0.0}) <=
              1e-15);
    }
    SUBCASE("inverse of z damping") {
        AffineGenerator a;
        a.m(0, 0) = a.m(1, 1) = -2.0;
        const GksForm g = gks_from_affine(a);
        CHECK(g.h.norm() == 0.0);
        CHECK(g.c.mat().max_abs_diff(z_damping().c.mat()) <= 1e-15);
    }
    SUBCASE("zero map") {
        const GksForm g = gks_from_affine(AffineGenerator{});
        CHECK(g.h.norm() == 0.0);
        CHECK(g.c.mat().max_abs() == 0.0);
    }
}

TEST_CASE("round trip through the affine representation") {
    Sampler s(5);
    double err = 0.0;
    for (int k = 0; k < 1000; ++k) {
        // arbitrary affine maps round trip too (PSD not required)
        const AffineGenerator a = s.affine();
        const AffineGenerator back = affine_from_gks(gks_from_affine(a));
        err = std::max(err, back.m.max_abs_diff(a.m));
        err = std::max(err, back.b.max_abs_diff(a.b));
    }
    CHECK(err <= 1e-12);
}

TEST_CASE("representation theorem on random generators") {
    Sampler s(17);
    double err = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const GksForm g = s.gks();
        const DensityMatrix rho = s.density();
        const Vec3 via_matrix = bloch_of(apply_generator(g, rho));
        const AffineGenerator a = affine_from_gks(g);
        const Vec3 via_affine = a.m * bloch_from_density(rho).vec() + a.b;
        err = std::max(err, via_matrix.max_abs_diff(via_affine));
    }
    CHECK(err <= 1e-10);
}

TEST_CASE("validate_gks classification") {
    CHECK(validate_gks(z_damping().c) == GksClassification::ValidMarkovian);

    CMat3 bad;
    bad(0, 0) = -0.1;
    bad(1, 1) = bad(2, 2) = 1.0;
    CHECK(validate_gks(GksMatrix(bad)) == GksClassification::NotPsd);

    CHECK(validate_gks(scheme_gks(EulerAngles(1.0, 0.3, 0.7))) ==
          GksClassification::ValidMarkovian);

    CMat3 non_hermitian;
    non_hermitian(0, 1) = 1.0;
    CHECK_THROWS_AS(GksMatrix{non_hermitian}, UsageError);
}

TEST_CASE("unitality criterion") {
    AffineGenerator unital;
    unital.m(0, 0) = unital.m(1, 1) = -2.0;
    CHECK(is_unital(unital));

    AffineGenerator biased = unital;
    biased.b[2] = -2.0;
    CHECK_FALSE(is_unital(biased));

    Sampler s(23);
    for (int k = 0; k < 200; ++k) {
        const AffineGenerator a = s.affine();
        const bool real_c = gks_from_affine(a).c.is_real(1e-10);
        CHECK(is_unital(a) == real_c);
    }
}

TEST_CASE("conjugate_gks") {
    SUBCASE("identity rotation") {
        const GksMatrix c = z_damping().c;
        CHECK(conjugate_gks(c, Mat3::identity()).mat().max_abs_diff(c.mat()) ==
              0.0);
    }
    SUBCASE("quarter turn about y moves z damping to x damping") {
        Mat3 r;  // rotation by pi/2 about y: z -> x
        r(0, 2) = 1.0;
        r(1, 1) = 1.0;
        r(2, 0) = -1.0;
        CMat3 expected;
        expected(0, 0) = 1.0;
        CHECK(conjugate_gks(z_damping().c, r).mat().max_abs_diff(expected) <=
              1e-15);
    }
    SUBCASE("eigenvalues and trace preserved for random pairs") {
        Sampler s(29);
        for (int k = 0; k < 200; ++k) {
            const GksMatrix c = s.gks().c;
            const GksMatrix rotated = conjugate_gks(c, s.rotation());
            const auto before = c.eigenvalues();
            const auto after = rotated.eigenvalues();
            for (int i = 0; i < 3; ++i)
                CHECK(std::abs(before[i] - after[i]) <= 1e-10);
            CHECK(std::abs(c.mat().trace().real() -
                           rotated.mat().trace().real()) <= 1e-10);
        }
    }
    SUBCASE("non-rotation input rejected") {
        CHECK_THROWS_AS(
            conjugate_gks(z_damping().c, Mat3::identity() * 2.0), UsageError);
    }
}
