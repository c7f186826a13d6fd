#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "petz/divergence.hpp"
#include "petz/random_states.hpp"

namespace petz {

struct VerifyOptions {
    std::size_t trials = 100;
    std::size_t dim = 4;
    std::uint64_t seed = 1;
    // Deliberately perturbs one comparison so the harness can prove it
    // detects violations.
    bool inject_bug = false;
};

struct CheckResult {
    std::string name;
    std::size_t evaluations = 0;
    std::size_t violations = 0;
    double worst = 0.0;         // largest observed residual / deficit
    std::string reproduction;   // spectra of the first violating pair
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string to_string() const;
};

// Runs every cross-module property check on seeded random state pairs
// (including rank-deficient and degenerate draws). Deterministic for a fixed
// seed.
VerifyReport run_property_suite(const VerifyOptions& opts);

}  // namespace petz
