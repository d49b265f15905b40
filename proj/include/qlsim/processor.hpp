#pragma once

#include <optional>

#include "qlsim/generator.hpp"

namespace qlsim {

/// Euler angles in the y convention, canonicalized to [0, 2*pi).
struct EulerAngles {
    EulerAngles(double theta_, double phi_, double psi_);
    double theta, phi, psi;
};

/// One-qubit program: sqrt(1-eps) e^{i chi}|0> + sqrt(eps)|1>. eps plays dt.
struct ProgramState {
    ProgramState(double epsilon_, double chi_ = 0.0);
    double epsilon;
    double chi;
};

/// The SU(2) block of the controlled-U processor.
CMat2 su2_from_euler(const EulerAngles& a);

/// Adjoint SO(3) rotation of su2_from_euler(a): U s_j U^dag = sum_i R_ij s_i.
Mat3 adjoint_rotation(const EulerAngles& a);

/// Adjoint rotation computed from an explicit unitary via the trace formula.
Mat3 adjoint_rotation(const CMat2& u2, const Tolerances& tol = default_tol());

CVec2 program_ket(const ProgramState& p);

/// Block-diagonal [[I,0],[0,U2]]; program qubit is the first tensor factor.
CMat4 build_controlled_u(const CMat2& u2, const Tolerances& tol = default_tol());

/// Brute force: Tr_1( U (|prog><prog| x rho) U^dag ) on the full 4x4 space.
DensityMatrix processor_step_oracle(const ProgramState& p, const CMat2& u2,
                                    const DensityMatrix& rho);

/// Closed form (1-eps) rho + eps U2 rho U2^dag; independent of chi.
DensityMatrix processor_step_closed(const ProgramState& p, const CMat2& u2,
                                    const DensityMatrix& rho);

/// Generator induced by the scheme: m = R - I, b = 0 (unital).
AffineGenerator generator_from_unitary(const CMat2& u2,
                                       const Tolerances& tol = default_tol());

/// Coherent part of the induced generator, closed form in the angles.
HamiltonianVec scheme_hamiltonian(const EulerAngles& a);

/// Closed-form Hamiltonian matrix in the angles (coefficient convention of
/// scheme_hamiltonian: the matrix equals sum h_i sigma_i).
CMat2 scheme_hamiltonian_matrix(const EulerAngles& a);

/// Dissipative part of the induced generator, closed form in the angles.
/// Real symmetric PSD of rank 1 (zero only for the identity channel).
GksMatrix scheme_gks(const EulerAngles& a);

/// Traceless special case psi = pi - phi.
GksMatrix scheme_gks_traceless(double theta, double phi);

/// Unit axis n with scheme_gks_traceless(theta, phi) = n n^T; polar angles
/// (theta/2, phi). Gauge fixed to cos(theta/2) >= 0, ties broken by
/// cos(phi) >= 0 then sin(phi) > 0.
Vec3 phase_damping_axis(double theta, double phi);

/// Damping axis recovered from a real rank-1 GKS matrix (same gauge as
/// phase_damping_axis). Empty for the degenerate identity channel (C = 0)
/// and for matrices that are not rank-1 real within tolerance.
std::optional<Vec3> damping_axis_from_gks(const GksMatrix& c, double tol = 1e-10);

}  // namespace qlsim
