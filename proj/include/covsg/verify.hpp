// Self-check harness: every closed form in the library is re-derived through
// an independent route (tensor congruence, operator conjugation, or direct
// matrix algebra) and the worst deviation is reported per named check. The
// CLI's verify-paper subcommand and the acceptance suite both run this list.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covsg/experiment.hpp"

namespace covsg {

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double threshold = 0.0;
    bool passed = false;
    bool informational = false;  // reported, never a failure
    std::string note;
};

struct VerifyOptions {
    int random_samples = 50;
    std::uint64_t seed = 0x5eed5eedULL;
};

std::vector<CheckResult> run_paper_checks(const VerifyOptions& opts = {});

// True when every non-informational check passed.
bool all_passed(const std::vector<CheckResult>& checks);

// Shared parameter grids: gamma in {1, 1.25, 2, 5}, phi in {0, pi/12, ..., pi/2},
// beta in {0, 0.3, 0.6, 0.9}.
const std::vector<double>& gamma_grid();
const std::vector<double>& phi_grid();
const std::vector<double>& beta_grid();

double beta_of_gamma(double gamma);

// Spin-algebra residuals of both operators per speed, maximized over a
// deterministic sample of directions.
struct AlgebraRow {
    double beta = 0.0;
    double gamma = 1.0;
    double relativistic_residual = 0.0;
    double dirac_residual = 0.0;
};

std::vector<AlgebraRow> algebra_residual_table(const std::vector<double>& speeds,
                                               int directions = 8,
                                               std::uint64_t seed = 0x5eed5eedULL);

}  // namespace covsg
