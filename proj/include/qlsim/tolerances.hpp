#pragma once

namespace qlsim {

/// Central numeric tolerance knobs. Every module reads from one instance so
/// property tests can tighten or loosen the whole stack at once.
struct Tolerances {
    double hermiticity = 1e-12;   // max |A - A^dag| entry accepted
    double trace = 1e-12;         // |tr(rho) - 1|
    double psd_floor = -1e-10;    // smallest eigenvalue accepted as >= 0
    double completeness = 1e-10;  // |sum E_k^dag E_k - I| for Kraus sets
    double rotation = 1e-10;      // orthogonality/det test for SO(3) inputs
    double unital = 1e-10;        // ||b|| below which a generator is unital
    double bloch_norm = 1e-10;    // slack on ||r|| <= 1
};

inline const Tolerances& default_tol() {
    static const Tolerances t{};
    return t;
}

}  // namespace qlsim
