#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlsim/matrix.hpp"

namespace qlsim {

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_error = 0.0;
    double threshold = 0.0;
    std::size_t cases = 0;
};

struct VerifyOptions {
    std::uint64_t seed = 20240901;
    std::size_t cases = 1000;
    /// Test hook: added to C(0,0) of every scheme GKS matrix inside the
    /// rank-1 check so harness failures are detectable.
    double rank1_perturbation = 0.0;
};

/// Seeded cross-checks tying the closed forms to their brute-force oracles.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qlsim
