#include "qlsim/verify.hpp"

#include "qlsim/evolution.hpp"
#include "qlsim/random.hpp"

namespace qlsim {

namespace {

CheckResult make_result(std::string name, double max_error, double threshold,
                        std::size_t cases) {
    return {std::move(name), max_error <= threshold, max_error, threshold, cases};
}

CheckResult check_representation(Sampler& s, std::size_t cases) {
    double err = 0.0;
    for (std::size_t k = 0; k < cases; ++k) {
        const GksForm g = s.gks();
        const DensityMatrix rho = s.density();
        const CMat2 lrho = apply_generator(g, rho);
        Vec3 via_matrix;
        for (int i = 0; i < 3; ++i)
            via_matrix[i] = (lrho * pauli(i + 1)).trace().real();
        const AffineGenerator a = affine_from_gks(g);
        const Vec3 via_affine = a.m * bloch_from_density(rho).vec() + a.b;
        err = std::max(err, via_matrix.max_abs_diff(via_affine));
    }
    return make_result("gks-affine representation", err, 1e-10, cases);
}

CheckResult check_roundtrip(Sampler& s, std::size_t cases) {
    double err = 0.0;
    for (std::size_t k = 0; k < cases; ++k) {
        const GksForm g = s.gks();
        const GksForm back = gks_from_affine(affine_from_gks(g));
        err = std::max(err, back.h.max_abs_diff(g.h));
        err = std::max(err, back.c.mat().max_abs_diff(g.c.mat()));
    }
    return make_result("gks-affine round trip", err, 1e-12, cases);
}

CheckResult check_processor_oracle(Sampler& s, std::size_t cases) {
    double err = 0.0;
    for (std::size_t k = 0; k < cases; ++k) {
        const ProgramState p(s.uniform(0.0, 1.0),
                             s.uniform(0.0, 2.0 * std::numbers::pi));
        const CMat2 u2 = su2_from_euler(s.euler());
        const DensityMatrix rho = s.density();
        const DensityMatrix oracle = processor_step_oracle(p, u2, rho);
        const DensityMatrix closed = processor_step_closed(p, u2, rho);
        err = std::max(err, oracle.mat().max_abs_diff(closed.mat()));
    }
    return make_result("processor oracle vs closed form", err, 1e-11, cases);
}

CheckResult check_scheme_closed_form(Sampler& s, std::size_t cases) {
    double err = 0.0;
    for (std::size_t k = 0; k < cases; ++k) {
        const EulerAngles a = s.euler();
        const GksForm brute =
            gks_from_affine(generator_from_unitary(su2_from_euler(a)));
        err = std::max(err, brute.h.max_abs_diff(scheme_hamiltonian(a)));
        err = std::max(err, brute.c.mat().max_abs_diff(scheme_gks(a).mat()));
    }
    return make_result("scheme closed form vs brute force", err, 1e-10, cases);
}

CheckResult check_rank_one(Sampler& s, std::size_t cases, double perturbation) {
    double err = 0.0;
    std::size_t tested = 0;
    for (std::size_t k = 0; k < cases; ++k) {
        const EulerAngles a = s.euler();
        CMat3 c = scheme_gks(a).mat();
        c(0, 0) += perturbation;
        const auto w = hermitian_eigenvalues(c);
        if (w[2] <= 1e-12) continue;  // degenerate identity channel
        ++tested;
        err = std::max({err, std::abs(w[0]), std::abs(w[1])});
    }
    return make_result("scheme GKS rank 1", err, 1e-10, tested);
}

CheckResult check_phase_damping(Sampler& s, std::size_t cases) {
    double err = 0.0;
    for (std::size_t k = 0; k < cases; ++k) {
        const double theta = s.uniform(0.0, 2.0 * std::numbers::pi);
        const double phi = s.uniform(0.0, 2.0 * std::numbers::pi);
        const CMat3 c = scheme_gks_traceless(theta, phi).mat();
        const Vec3 n = phase_damping_axis(theta, phi);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                err = std::max(err, std::abs(c(i, j).real() - n[i] * n[j]));
        // psi does not enter the rotated-axis decomposition
        const double psi = s.uniform(0.0, 2.0 * std::numbers::pi);
        CMat3 dz;
        dz(2, 2) = 1.0;
        const GksMatrix rotated = conjugate_gks(
            GksMatrix(dz), adjoint_rotation(EulerAngles(theta / 2.0, phi, psi)));
        err = std::max(err, rotated.mat().max_abs_diff(c));
    }
    return make_result("phase damping axis decomposition", err, 1e-10, cases);
}

CheckResult check_teleport_oracle(Sampler& s, std::size_t cases) {
    double err = 0.0;
    for (std::size_t k = 0; k < cases; ++k) {
        const BellProgram p = s.bell_program();
        const DensityMatrix rho = s.density();
        const DensityMatrix oracle = teleport_channel_oracle(p, rho);
        const DensityMatrix closed = teleport_channel_closed(p, rho);
        err = std::max(err, oracle.mat().max_abs_diff(closed.mat()));
        const GksForm g = gks_from_affine(teleport_generator(p.alpha));
        err = std::max(err, g.h.norm());
        err = std::max(err, g.c.mat().max_abs_diff(teleport_gks(p.alpha).mat()));
    }
    return make_result("teleport oracle vs closed form", err, 1e-10, cases);
}

CheckResult check_semigroup(Sampler& s, std::size_t cases) {
    double err = 0.0;
    for (std::size_t k = 0; k < cases; ++k) {
        const AffineGenerator g = affine_from_gks(s.gks());
        const double t1 = s.uniform(0.0, 1.0);
        const double t2 = s.uniform(0.0, 1.0);
        const AffineChannel composed =
            compose_channels(exact_channel(g, t1), exact_channel(g, t2));
        const AffineChannel direct = exact_channel(g, t1 + t2);
        err = std::max(err, composed.m.max_abs_diff(direct.m));
        err = std::max(err, composed.b.max_abs_diff(direct.b));
    }
    return make_result("semigroup composition", err, 1e-9, cases);
}

CheckResult check_conjugation(Sampler& s, std::size_t cases) {
    double err = 0.0;
    for (std::size_t k = 0; k < cases; ++k) {
        const GksForm g = s.gks();
        const Mat3 r = s.rotation();
        const auto before = g.c.eigenvalues();
        const auto after = conjugate_gks(g.c, r).eigenvalues();
        for (int i = 0; i < 3; ++i)
            err = std::max(err, std::abs(before[i] - after[i]));
    }
    return make_result("conjugation eigenvalue invariance", err, 1e-10, cases);
}

CheckResult check_euler_order(Sampler&, std::size_t) {
    // z phase damping, r0 = (1,0,0): exact r1(T) = exp(-2T).
    AffineGenerator g;
    g.m(0, 0) = g.m(1, 1) = -2.0;
    const BlochVector r0(1.0, 0.0, 0.0);
    const double T = 1.0;
    const double exact = std::exp(-2.0 * T);
    std::vector<double> errors;
    for (double dt : {0.1, 0.05, 0.025, 0.0125}) {
        const auto n = static_cast<std::size_t>(std::llround(T / dt));
        const Trajectory traj = euler_trajectory(g, r0, dt, n);
        errors.push_back(std::abs(traj.states.back()[0] - exact));
    }
    double worst = 0.0;  // deviation of the observed order from 1
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        const double order = std::log2(errors[i] / errors[i + 1]);
        worst = std::max(worst, std::abs(order - 1.0));
    }
    CheckResult r = make_result("euler first-order convergence", worst, 0.1,
                                errors.size());
    return r;
}

CheckResult check_generator_estimate(Sampler&, std::size_t) {
    AffineGenerator g;
    g.m(0, 0) = g.m(1, 1) = -2.0;
    g.m(0, 1) = -0.7;
    g.m(1, 0) = 0.7;
    auto err_at = [&](double t) {
        const AffineGenerator est = estimate_generator(exact_channel(g, t), t);
        return std::max(est.m.max_abs_diff(g.m), est.b.max_abs_diff(g.b));
    };
    double worst = 0.0;  // deviation of the halving ratio from 2
    const std::array<double, 3> ts = {1e-2, 5e-3, 2.5e-3};
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const double ratio = err_at(ts[i]) / err_at(ts[i + 1]);
        worst = std::max(worst, std::abs(ratio - 2.0));
    }
    return make_result("generator estimation O(t) error", worst, 0.1, ts.size());
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    Sampler s(opt.seed);
    std::vector<CheckResult> results;
    results.push_back(check_representation(s, opt.cases));
    results.push_back(check_roundtrip(s, opt.cases));
    results.push_back(check_processor_oracle(s, opt.cases));
    results.push_back(check_scheme_closed_form(s, opt.cases));
    results.push_back(check_rank_one(s, opt.cases, opt.rank1_perturbation));
    results.push_back(check_phase_damping(s, opt.cases));
    results.push_back(check_teleport_oracle(s, std::max<std::size_t>(1, opt.cases / 2)));
    results.push_back(check_semigroup(s, std::max<std::size_t>(1, opt.cases / 5)));
    results.push_back(check_conjugation(s, std::max<std::size_t>(1, opt.cases / 5)));
    results.push_back(check_euler_order(s, opt.cases));
    results.push_back(check_generator_estimate(s, opt.cases));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace qlsim
