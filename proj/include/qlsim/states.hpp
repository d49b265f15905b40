#pragma once

#include <vector>

#include "qlsim/matrix.hpp"
#include "qlsim/tolerances.hpp"

namespace qlsim {

/// Pauli matrix; index 0 is the identity, 3 is diag(1,-1).
const CMat2& pauli(int i);

/// Real 3-vector image of a qubit state on the closed unit Bloch ball.
class BlochVector {
  public:
    BlochVector() = default;  // center (maximally mixed)
    BlochVector(double r1, double r2, double r3,
                const Tolerances& tol = default_tol());
    explicit BlochVector(const Vec3& r, const Tolerances& tol = default_tol());

    const Vec3& vec() const { return r_; }
    double operator[](int i) const { return r_[i]; }
    double norm() const { return r_.norm(); }

  private:
    Vec3 r_{};
};

/// 2x2 Hermitian, unit trace, positive semidefinite (all within tolerance).
class DensityMatrix {
  public:
    /// Validates the invariants; throws InvalidStateError on violation.
    explicit DensityMatrix(const CMat2& m, const Tolerances& tol = default_tol());

    static DensityMatrix maximally_mixed();
    /// |0><0| or |1><1|
    static DensityMatrix basis_state(int bit);

    const CMat2& mat() const { return m_; }

  private:
    CMat2 m_;
};

/// r_i = tr(rho sigma_i); the imaginary residue of the traces is discarded.
BlochVector bloch_from_density(const DensityMatrix& rho);

/// rho = (I + sum r_i sigma_i) / 2
DensityMatrix density_from_bloch(const BlochVector& r);

/// sum_k E_k rho E_k^dag. The set must satisfy sum E_k^dag E_k = I.
DensityMatrix apply_kraus(const std::vector<CMat2>& ops, const DensityMatrix& rho,
                          const Tolerances& tol = default_tol());

}  // namespace qlsim
