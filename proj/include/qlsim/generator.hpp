#pragma once

#include "qlsim/states.hpp"

namespace qlsim {

/// Coefficients of a traceless Hermitian Hamiltonian H = (1/2) sum h_i sigma_i.
using HamiltonianVec = Vec3;

/// 3x3 Hermitian coefficient matrix of the dissipative part of a generator.
/// Construction enforces Hermiticity only; positivity is a separate
/// classification step (validate_gks) so non-Markovian candidates can be
/// represented and rejected explicitly.
class GksMatrix {
  public:
    GksMatrix() = default;  // zero
    explicit GksMatrix(const CMat3& c, const Tolerances& tol = default_tol());

    const CMat3& mat() const { return c_; }
    bool is_real(double tol) const;
    std::array<double, 3> eigenvalues() const { return hermitian_eigenvalues(c_); }
    int rank(double tol = 1e-10) const;

  private:
    CMat3 c_;
};

/// Canonical generator: -i[H, rho] + (1/2) sum C_ij ([s_i rho, s_j] + [s_i, rho s_j]).
struct GksForm {
    HamiltonianVec h{};
    GksMatrix c{};
};

/// Action on Bloch vectors: L[r] = m r + b.
struct AffineGenerator {
    Mat3 m{};
    Vec3 b{};
};

enum class GksClassification { ValidMarkovian, NotPsd };

/// Evaluate the canonical form on a state. The result is a traceless
/// Hermitian 2x2 matrix (the time derivative of rho), not a state.
CMat2 apply_generator(const GksForm& g, const DensityMatrix& rho);

/// GKS -> affine: antisymmetric block from h, symmetric block from Re C,
/// inhomogeneity 2i(C23-C32, C31-C13, C12-C21) from Im C.
AffineGenerator affine_from_gks(const GksForm& g);

/// Exact inverse of affine_from_gks. The returned C is Hermitian by
/// construction but not necessarily PSD; classify with validate_gks.
GksForm gks_from_affine(const AffineGenerator& a);

/// PSD test via the closed-form 3x3 Hermitian eigenvalues.
GksClassification validate_gks(const GksMatrix& c,
                               const Tolerances& tol = default_tol());

/// True iff the inhomogeneity vanishes (equivalently Im C = 0).
bool is_unital(const AffineGenerator& a, const Tolerances& tol = default_tol());

/// C' = R C R^T for a proper rotation R (unitary conjugation, adjoint picture).
GksMatrix conjugate_gks(const GksMatrix& c, const Mat3& rotation,
                        const Tolerances& tol = default_tol());

}  // namespace qlsim
