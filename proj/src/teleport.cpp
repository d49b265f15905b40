#include "qlsim/teleport.hpp"

namespace qlsim {

namespace {

double alpha_norm2(const std::array<cxd, 3>& alpha) {
    return std::norm(alpha[0]) + std::norm(alpha[1]) + std::norm(alpha[2]);
}

void require_normalized(const std::array<cxd, 3>& alpha, const Tolerances& tol) {
    for (const auto& a : alpha)
        if (!finite(a)) throw UsageError("alpha entry not finite");
    if (std::abs(alpha_norm2(alpha) - 1.0) > tol.completeness)
        throw UsageError("teleport program alphas must satisfy sum |a_i|^2 = 1");
}

}  // namespace

BellProgram::BellProgram(double epsilon_, const std::array<cxd, 3>& alpha_,
                         const Tolerances& tol)
    : epsilon(epsilon_), alpha(alpha_) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw UsageError("teleport program epsilon must lie in [0,1]");
    require_normalized(alpha, tol);
}

const std::array<CVec4, 4>& bell_basis() {
    static const std::array<CVec4, 4> basis = [] {
        const double s = std::numbers::sqrt2 / 2.0;
        std::array<CVec4, 4> b{};
        b[0][1] = s;  b[0][2] = -s;  // (|01> - |10>)/sqrt2
        b[1][0] = s;  b[1][3] = -s;  // (|00> - |11>)/sqrt2
        b[2][0] = s;  b[2][3] = s;   // (|00> + |11>)/sqrt2
        b[3][1] = s;  b[3][2] = s;   // (|01> + |10>)/sqrt2
        return b;
    }();
    return basis;
}

CVec4 teleport_program_ket(const BellProgram& p) {
    const auto& b = bell_basis();
    CVec4 v;
    const double w0 = std::sqrt(1.0 - p.epsilon);
    const double w1 = std::sqrt(p.epsilon);
    for (int k = 0; k < 4; ++k)
        v[k] = w0 * b[0][k] + w1 * (p.alpha[0] * b[1][k] + p.alpha[1] * b[2][k] +
                                    p.alpha[2] * b[3][k]);
    return v;
}

DensityMatrix teleport_channel_closed(const BellProgram& p,
                                      const DensityMatrix& rho) {
    CMat2 out = rho.mat() * cxd{1.0 - p.epsilon, 0.0};
    for (int i = 0; i < 3; ++i) {
        const double w = p.epsilon * std::norm(p.alpha[i]);
        out = out + pauli(i + 1) * rho.mat() * pauli(i + 1) * cxd{w, 0.0};
    }
    return DensityMatrix(out);
}

DensityMatrix teleport_channel_oracle(const BellProgram& p,
                                      const DensityMatrix& rho) {
    // (data, program-a, program-b); program pair carries the entangled state
    const CMat4 prog = teleport_program_ket(p).outer();
    const CMat8 joint = tensor(rho.mat(), prog);
    CMat2 out;
    for (int k = 0; k < 4; ++k) {
        // project (data, program-a) onto Bell outcome k
        const CMat8 proj = tensor(bell_basis()[k].outer(), CMat2::identity());
        const CMat2 branch = partial_trace_first<2>(proj * joint * proj);
        const CMat2& corr = pauli(k);  // B0 -> identity, Bk -> sigma_k
        out = out + corr * branch * corr.dagger();
    }
    return DensityMatrix(out);
}

AffineGenerator teleport_generator(const std::array<cxd, 3>& alpha,
                                   const Tolerances& tol) {
    require_normalized(alpha, tol);
    const double a1 = std::norm(alpha[0]);
    const double a2 = std::norm(alpha[1]);
    const double a3 = std::norm(alpha[2]);
    AffineGenerator g;
    g.m(0, 0) = -2.0 * (a2 + a3);
    g.m(1, 1) = -2.0 * (a1 + a3);
    g.m(2, 2) = -2.0 * (a1 + a2);
    return g;
}

GksMatrix teleport_gks(const std::array<cxd, 3>& alpha, const Tolerances& tol) {
    require_normalized(alpha, tol);
    CMat3 c;
    for (int i = 0; i < 3; ++i) c(i, i) = std::norm(alpha[i]);
    return GksMatrix(c);
}

}  // namespace qlsim
