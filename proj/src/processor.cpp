#include "qlsim/processor.hpp"

#include <numbers>

namespace qlsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double x) {
    if (!std::isfinite(x)) throw UsageError("Euler angle not finite");
    double w = std::fmod(x, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w < kTwoPi ? w : 0.0;
}

Vec3 fix_axis_gauge(Vec3 n) {
    constexpr double eps = 1e-14;
    double lead = n[2];
    if (std::abs(lead) <= eps) lead = n[0];
    if (std::abs(lead) <= eps) lead = n[1];
    return lead < 0.0 ? n * -1.0 : n;
}

}  // namespace

EulerAngles::EulerAngles(double theta_, double phi_, double psi_)
    : theta(wrap_angle(theta_)), phi(wrap_angle(phi_)), psi(wrap_angle(psi_)) {}

ProgramState::ProgramState(double epsilon_, double chi_)
    : epsilon(epsilon_), chi(chi_) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw UsageError("program epsilon must lie in [0,1]");
    if (!std::isfinite(chi)) throw UsageError("program chi not finite");
}

CMat2 su2_from_euler(const EulerAngles& a) {
    const double c = std::cos(a.theta / 2.0);
    const double s = std::sin(a.theta / 2.0);
    const double sum = (a.phi + a.psi) / 2.0;
    const double dif = (a.phi - a.psi) / 2.0;
    CMat2 u;
    u(0, 0) = c * std::polar(1.0, -sum);
    u(0, 1) = -s * std::polar(1.0, -dif);
    u(1, 0) = s * std::polar(1.0, dif);
    u(1, 1) = c * std::polar(1.0, sum);
    return u;
}

Mat3 adjoint_rotation(const EulerAngles& a) {
    const double ct = std::cos(a.theta), st = std::sin(a.theta);
    const double cp = std::cos(a.phi), sp = std::sin(a.phi);
    const double cs = std::cos(a.psi), ss = std::sin(a.psi);
    Mat3 r;
    r(0, 0) = -sp * ss + ct * cp * cs;
    r(0, 1) = -ct * cp * ss - sp * cs;
    r(0, 2) = st * cp;
    r(1, 0) = ct * sp * cs + cp * ss;
    r(1, 1) = cp * cs - ct * sp * ss;
    r(1, 2) = st * sp;
    r(2, 0) = -st * cs;
    r(2, 1) = st * ss;
    r(2, 2) = ct;
    return r;
}

Mat3 adjoint_rotation(const CMat2& u2, const Tolerances& tol) {
    if (!u2.is_unitary(tol.completeness))
        throw UsageError("adjoint_rotation requires a unitary matrix");
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) =
                0.5 * (pauli(i + 1) * u2 * pauli(j + 1) * u2.dagger()).trace().real();
    return r;
}

CVec2 program_ket(const ProgramState& p) {
    CVec2 v;
    v[0] = std::sqrt(1.0 - p.epsilon) * std::polar(1.0, p.chi);
    v[1] = std::sqrt(p.epsilon);
    return v;
}

CMat4 build_controlled_u(const CMat2& u2, const Tolerances& tol) {
    if (!u2.is_unitary(tol.completeness))
        throw UsageError("controlled-U block must be unitary");
    CMat4 u = CMat4::zero();
    u(0, 0) = u(1, 1) = 1.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) u(2 + i, 2 + j) = u2(i, j);
    return u;
}

DensityMatrix processor_step_oracle(const ProgramState& p, const CMat2& u2,
                                    const DensityMatrix& rho) {
    const CMat4 u = build_controlled_u(u2);
    const CMat4 joint = tensor(program_ket(p).outer(), rho.mat());
    const CMat4 evolved = u * joint * u.dagger();
    return DensityMatrix(partial_trace_first<2>(evolved));
}

DensityMatrix processor_step_closed(const ProgramState& p, const CMat2& u2,
                                    const DensityMatrix& rho) {
    const CMat2 rotated = u2 * rho.mat() * u2.dagger();
    return DensityMatrix(rho.mat() * cxd{1.0 - p.epsilon, 0.0} +
                         rotated * cxd{p.epsilon, 0.0});
}

AffineGenerator generator_from_unitary(const CMat2& u2, const Tolerances& tol) {
    AffineGenerator g;
    g.m = adjoint_rotation(u2, tol) - Mat3::identity();
    return g;
}

CMat2 scheme_hamiltonian_matrix(const EulerAngles& a) {
    const double c2 = std::cos(a.theta / 2.0) * std::cos(a.theta / 2.0);
    const double st = std::sin(a.theta);
    CMat2 h;
    h(0, 0) = std::sin(a.phi + a.psi) * c2;
    h(1, 1) = -h(0, 0);
    h(0, 1) = cxd{0.0, -0.5} * st *
              (std::polar(1.0, -a.phi) + std::polar(1.0, a.psi));
    h(1, 0) = std::conj(h(0, 1));
    return h;
}

HamiltonianVec scheme_hamiltonian(const EulerAngles& a) {
    // The closed-form matrix carries coefficients against sigma_i directly
    // (no 1/2), so h_i = tr(M sigma_i) / 2.
    const CMat2 m = scheme_hamiltonian_matrix(a);
    HamiltonianVec h;
    for (int i = 0; i < 3; ++i) h[i] = 0.5 * (m * pauli(i + 1)).trace().real();
    return h;
}

GksMatrix scheme_gks(const EulerAngles& a) {
    const double s2 = std::sin(a.theta / 2.0) * std::sin(a.theta / 2.0);
    const double c2 = std::cos(a.theta / 2.0) * std::cos(a.theta / 2.0);
    const double st = std::sin(a.theta);
    const double dif = (a.phi - a.psi) / 2.0;
    const double sum = (a.phi + a.psi) / 2.0;
    CMat3 c;
    c(0, 0) = s2 * std::sin(dif) * std::sin(dif);
    c(1, 1) = s2 * std::cos(dif) * std::cos(dif);
    c(2, 2) = c2 * std::sin(sum) * std::sin(sum);
    c(0, 1) = c(1, 0) = 0.5 * s2 * std::sin(a.psi - a.phi);
    c(0, 2) = c(2, 0) = 0.25 * st * (std::cos(a.phi) - std::cos(a.psi));
    c(1, 2) = c(2, 1) = 0.25 * st * (std::sin(a.phi) + std::sin(a.psi));
    return GksMatrix(c);
}

GksMatrix scheme_gks_traceless(double theta, double phi) {
    const EulerAngles a(theta, phi, std::numbers::pi - phi);
    const double s2 = std::sin(a.theta / 2.0) * std::sin(a.theta / 2.0);
    const double c2 = std::cos(a.theta / 2.0) * std::cos(a.theta / 2.0);
    const double st = std::sin(a.theta);
    const double cp = std::cos(a.phi), sp = std::sin(a.phi);
    CMat3 c;
    c(0, 0) = s2 * cp * cp;
    c(1, 1) = s2 * sp * sp;
    c(2, 2) = c2;
    c(0, 1) = c(1, 0) = 0.5 * s2 * std::sin(2.0 * a.phi);
    c(0, 2) = c(2, 0) = 0.5 * st * cp;
    c(1, 2) = c(2, 1) = 0.5 * st * sp;
    return GksMatrix(c);
}

Vec3 phase_damping_axis(double theta, double phi) {
    const EulerAngles a(theta, phi, 0.0);
    const double sh = std::sin(a.theta / 2.0);
    const double ch = std::cos(a.theta / 2.0);
    return fix_axis_gauge(
        Vec3{{sh * std::cos(a.phi), sh * std::sin(a.phi), ch}});
}

std::optional<Vec3> damping_axis_from_gks(const GksMatrix& c, double tol) {
    if (!c.is_real(tol)) return std::nullopt;
    const auto w = c.eigenvalues();
    if (w[2] <= tol) return std::nullopt;           // zero matrix
    if (std::abs(w[1]) > tol) return std::nullopt;  // not rank 1
    // C = lambda n n^T: the column of largest norm is proportional to n.
    int best = 0;
    double best_norm = -1.0;
    for (int j = 0; j < 3; ++j) {
        double nrm = 0.0;
        for (int i = 0; i < 3; ++i) nrm += std::norm(c.mat()(i, j));
        if (nrm > best_norm) {
            best_norm = nrm;
            best = j;
        }
    }
    Vec3 n;
    for (int i = 0; i < 3; ++i) n[i] = c.mat()(i, best).real();
    const double len = n.norm();
    return fix_axis_gauge(n * (1.0 / len));
}

}  // namespace qlsim
