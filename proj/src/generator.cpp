#include "qlsim/generator.hpp"

namespace qlsim {

GksMatrix::GksMatrix(const CMat3& c, const Tolerances& tol) : c_(c) {
    for (const auto& z : c.e)
        if (!finite(z)) throw UsageError("GKS matrix entry not finite");
    if (!c.is_hermitian(tol.hermiticity))
        throw UsageError("GKS matrix not Hermitian within tolerance");
}

bool GksMatrix::is_real(double tol) const {
    for (const auto& z : c_.e)
        if (std::abs(z.imag()) > tol) return false;
    return true;
}

int GksMatrix::rank(double tol) const {
    int r = 0;
    for (double w : eigenvalues())
        if (std::abs(w) > tol) ++r;
    return r;
}

CMat2 apply_generator(const GksForm& g, const DensityMatrix& rho) {
    const CMat2& p = rho.mat();
    CMat2 ham;  // (1/2) sum h_i sigma_i
    for (int i = 0; i < 3; ++i) ham = ham + pauli(i + 1) * cxd{0.5 * g.h[i], 0.0};
    CMat2 out = (ham * p - p * ham) * cxd{0.0, -1.0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const cxd cij = g.c.mat()(i, j);
            if (cij == cxd{}) continue;
            const CMat2& si = pauli(i + 1);
            const CMat2& sj = pauli(j + 1);
            // [s_i rho, s_j] + [s_i, rho s_j]
            const CMat2 comm =
                si * p * sj - sj * si * p + si * p * sj - p * sj * si;
            out = out + comm * (cij * 0.5);
        }
    return out;
}

AffineGenerator affine_from_gks(const GksForm& g) {
    const CMat3& c = g.c.mat();
    AffineGenerator a;
    // antisymmetric block from h
    a.m(0, 1) = -g.h[2];
    a.m(1, 0) = g.h[2];
    a.m(0, 2) = g.h[1];
    a.m(2, 0) = -g.h[1];
    a.m(1, 2) = -g.h[0];
    a.m(2, 1) = g.h[0];
    // symmetric block from Re C
    a.m(0, 0) += -2.0 * (c(1, 1).real() + c(2, 2).real());
    a.m(1, 1) += -2.0 * (c(0, 0).real() + c(2, 2).real());
    a.m(2, 2) += -2.0 * (c(0, 0).real() + c(1, 1).real());
    a.m(0, 1) += (c(0, 1) + c(1, 0)).real();
    a.m(1, 0) += (c(0, 1) + c(1, 0)).real();
    a.m(0, 2) += (c(0, 2) + c(2, 0)).real();
    a.m(2, 0) += (c(0, 2) + c(2, 0)).real();
    a.m(1, 2) += (c(1, 2) + c(2, 1)).real();
    a.m(2, 1) += (c(1, 2) + c(2, 1)).real();
    // inhomogeneity 2i (C23-C32, C31-C13, C12-C21); real for Hermitian C
    a.b[0] = (cxd{0.0, 2.0} * (c(1, 2) - c(2, 1))).real();
    a.b[1] = (cxd{0.0, 2.0} * (c(2, 0) - c(0, 2))).real();
    a.b[2] = (cxd{0.0, 2.0} * (c(0, 1) - c(1, 0))).real();
    return a;
}

GksForm gks_from_affine(const AffineGenerator& a) {
    GksForm g;
    // unique antisymmetric decomposition
    g.h[0] = 0.5 * (a.m(2, 1) - a.m(1, 2));
    g.h[1] = 0.5 * (a.m(0, 2) - a.m(2, 0));
    g.h[2] = 0.5 * (a.m(1, 0) - a.m(0, 1));
    const Mat3 sym = (a.m + a.m.transpose()) * 0.5;
    // diagonal: solve {-2(C22+C33)=m11, -2(C11+C33)=m22, -2(C11+C22)=m33}
    const double s = -sym.trace() / 4.0;  // C11+C22+C33
    CMat3 c;
    for (int i = 0; i < 3; ++i) c(i, i) = s + 0.5 * sym(i, i);
    // off-diagonal real parts from the symmetric block
    c(0, 1) += 0.5 * sym(0, 1);
    c(1, 0) += 0.5 * sym(0, 1);
    c(0, 2) += 0.5 * sym(0, 2);
    c(2, 0) += 0.5 * sym(0, 2);
    c(1, 2) += 0.5 * sym(1, 2);
    c(2, 1) += 0.5 * sym(1, 2);
    // imaginary parts from the inhomogeneity: b1 = -4 Im C23 etc.
    c(1, 2) += cxd{0.0, -a.b[0] / 4.0};
    c(2, 1) += cxd{0.0, a.b[0] / 4.0};
    c(2, 0) += cxd{0.0, -a.b[1] / 4.0};
    c(0, 2) += cxd{0.0, a.b[1] / 4.0};
    c(0, 1) += cxd{0.0, -a.b[2] / 4.0};
    c(1, 0) += cxd{0.0, a.b[2] / 4.0};
    g.c = GksMatrix(c);
    return g;
}

GksClassification validate_gks(const GksMatrix& c, const Tolerances& tol) {
    return c.eigenvalues()[0] >= tol.psd_floor ? GksClassification::ValidMarkovian
                                               : GksClassification::NotPsd;
}

bool is_unital(const AffineGenerator& a, const Tolerances& tol) {
    return a.b.norm() <= tol.unital;
}

GksMatrix conjugate_gks(const GksMatrix& c, const Mat3& rotation,
                        const Tolerances& tol) {
    if (!rotation.is_rotation(tol.rotation))
        throw UsageError("conjugate_gks requires a proper rotation");
    CMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = rotation(i, j);
    return GksMatrix(r * c.mat() * r.dagger());
}

}  // namespace qlsim
