#pragma once

// Built-in golden checks run by `sailcost validate`.

#include <string>
#include <vector>

#include "sailcost/cost_model.hpp"

namespace sailcost {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Inputs of the first worked example: beta0 = 0.2, m0 = 1 g, h = 1 um,
/// rho = 1 g/cc, lambda = 1 um, a1 = 1 USD/W, a2 = 1000 USD/m^2.
[[nodiscard]] CostProblem worked_example_problem(double laser_cost);

/// Checks 1..9. Deterministic: randomized checks use a fixed seed.
[[nodiscard]] std::vector<CheckResult> run_golden_checks();

}  // namespace sailcost
