#pragma once

#include "qlsim/generator.hpp"

namespace qlsim {

/// Two-qubit program sqrt(1-eps)|B0> + sqrt(eps) sum alpha_i |Bi>.
struct BellProgram {
    BellProgram(double epsilon_, const std::array<cxd, 3>& alpha_,
                const Tolerances& tol = default_tol());
    double epsilon;
    std::array<cxd, 3> alpha;
};

/// The four Bell states, B0 the singlet:
///   B0 = (|01> - |10>)/sqrt2, B1 = (|00> - |11>)/sqrt2,
///   B2 = (|00> + |11>)/sqrt2, B3 = (|01> + |10>)/sqrt2.
const std::array<CVec4, 4>& bell_basis();

CVec4 teleport_program_ket(const BellProgram& p);

/// (1-eps) rho + eps sum |alpha_i|^2 s_i rho s_i. Phases of alpha drop out.
DensityMatrix teleport_channel_closed(const BellProgram& p,
                                      const DensityMatrix& rho);

/// Full 3-qubit circuit: qubit order (data, program-a, program-b), Bell
/// measurement on (data, program-a), correction sigma_k on program-b for
/// outcome B_k (identity for B0), branches summed. Equals the closed form.
DensityMatrix teleport_channel_oracle(const BellProgram& p,
                                      const DensityMatrix& rho);

/// Generator of the induced Pauli channel:
/// m = -2 diag(|a2|^2+|a3|^2, |a1|^2+|a3|^2, |a1|^2+|a2|^2), b = 0.
AffineGenerator teleport_generator(const std::array<cxd, 3>& alpha,
                                   const Tolerances& tol = default_tol());

/// diag(|a1|^2, |a2|^2, |a3|^2).
GksMatrix teleport_gks(const std::array<cxd, 3>& alpha,
                       const Tolerances& tol = default_tol());

}  // namespace qlsim
