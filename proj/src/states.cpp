#include "qlsim/states.hpp"

#include <stdexcept>
#include <string>

namespace qlsim {

const CMat2& pauli(int i) {
    static const std::array<CMat2, 4> sigma = [] {
        std::array<CMat2, 4> s{};
        s[0] = CMat2::identity();
        s[1](0, 1) = 1.0;
        s[1](1, 0) = 1.0;
        s[2](0, 1) = cxd{0.0, -1.0};
        s[2](1, 0) = cxd{0.0, 1.0};
        s[3](0, 0) = 1.0;
        s[3](1, 1) = -1.0;
        return s;
    }();
    if (i < 0 || i > 3)
        throw UsageError("pauli index must be in 0..3, got " + std::to_string(i));
    return sigma[static_cast<std::size_t>(i)];
}

BlochVector::BlochVector(const Vec3& r, const Tolerances& tol) : r_(r) {
    for (double x : r.e)
        if (!std::isfinite(x)) throw InvalidStateError("Bloch vector entry not finite");
    if (r.norm() > 1.0 + tol.bloch_norm)
        throw InvalidStateError("Bloch vector outside the unit ball, |r| = " +
                                std::to_string(r.norm()));
}

BlochVector::BlochVector(double r1, double r2, double r3, const Tolerances& tol)
    : BlochVector(Vec3{{r1, r2, r3}}, tol) {}

DensityMatrix::DensityMatrix(const CMat2& m, const Tolerances& tol) : m_(m) {
    for (const auto& z : m.e)
        if (!finite(z)) throw InvalidStateError("density matrix entry not finite");
    if (!m.is_hermitian(tol.hermiticity))
        throw InvalidStateError("density matrix not Hermitian within tolerance");
    if (std::abs(m.trace() - cxd{1.0, 0.0}) > tol.trace)
        throw InvalidStateError("density matrix trace differs from 1");
    const auto w = hermitian_eigenvalues(m);
    if (w[0] < tol.psd_floor)
        throw InvalidStateError("density matrix has negative eigenvalue " +
                                std::to_string(w[0]));
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(CMat2::identity() * cxd{0.5, 0.0});
}

DensityMatrix DensityMatrix::basis_state(int bit) {
    if (bit != 0 && bit != 1) throw UsageError("basis_state takes 0 or 1");
    CMat2 m;
    m(bit, bit) = 1.0;
    return DensityMatrix(m);
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = (rho.mat() * pauli(i + 1)).trace().real();
    return BlochVector(r);
}

DensityMatrix density_from_bloch(const BlochVector& r) {
    CMat2 m = CMat2::identity();
    for (int i = 0; i < 3; ++i) m = m + pauli(i + 1) * cxd{r[i], 0.0};
    return DensityMatrix(m * cxd{0.5, 0.0});
}

DensityMatrix apply_kraus(const std::vector<CMat2>& ops, const DensityMatrix& rho,
                          const Tolerances& tol) {
    CMat2 completeness;
    for (const auto& e : ops) completeness = completeness + e.dagger() * e;
    if (completeness.max_abs_diff(CMat2::identity()) > tol.completeness)
        throw InvalidChannelError("Kraus set is not trace preserving");
    CMat2 out;
    for (const auto& e : ops) out = out + e * rho.mat() * e.dagger();
    return DensityMatrix(out, tol);
}

}  // namespace qlsim
