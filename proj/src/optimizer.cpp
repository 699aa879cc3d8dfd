#include "sailcost/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace sailcost {

namespace {

constexpr double c = speed_of_light;

// Geometric scan resolution used to pick the initial bracket.
constexpr int kScanPoints = 33;

std::string describe(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

OptimumDesign design_at(double aperture, const CostProblem& problem) {
    OptimumDesign design;
    design.method = OptimumMethod::numeric;
    design.coefficients = reduced_coefficients(problem);
    design.aperture = aperture;
    ArraySpec array;
    array.optics = problem.optics;
    array.aperture = aperture;
    array.power = required_power(problem.beta, problem.optics, aperture, problem.sail, problem.payload);
    design.power = array.power;
    design.kinematics = kinematics_optimized(array, problem.sail, problem.payload);
    design.breakdown = cost_components(design.power, design.kinematics.time, aperture, problem.metrics,
                                       problem.optics);
    return design;
}

void require_speed_metrics(const CostMetrics& metrics) {
    if (metrics.laser == 0.0 || metrics.optics == 0.0) {
        throw DegenerateOptimumError(
            "speed maximization at fixed cost needs a1 > 0 and a2 > 0; with a free cost item the speed is unbounded");
    }
}

SpeedMaxResult speed_result_at(double aperture, const SpeedProblem& problem, OptimumMethod method) {
    const double optics_cost = problem.metrics.optics * problem.optics.shape_factor * aperture * aperture;
    const double laser_budget = problem.budget - optics_cost;
    if (!(laser_budget > 0.0)) {
        throw InfeasibleError("budget " + describe(problem.budget) +
                              " USD leaves no money for laser power at d = " + describe(aperture) + " m");
    }
    SpeedMaxResult result;
    result.method = method;
    result.aperture = aperture;
    result.power = problem.optics.main_beam_fraction * laser_budget / problem.metrics.laser;
    result.beta = std::sqrt(beta_squared_at_budget(aperture, problem));
    if (result.beta >= 1.0) {
        throw DomainError("budget " + describe(problem.budget) + " USD would reach beta0 = " +
                          describe(result.beta) + ", outside the non-relativistic model");
    }
    ArraySpec array;
    array.optics = problem.optics;
    array.aperture = aperture;
    array.power = result.power;
    result.kinematics = kinematics_optimized(array, problem.sail, problem.payload);
    result.breakdown = cost_components(result.power, result.kinematics.time, aperture, problem.metrics,
                                       problem.optics);
    return result;
}

}  // namespace

void SearchSpec::validate() const {
    if (!(lower > 0.0) || !(upper > lower) || !std::isfinite(upper)) {
        throw ValidationError("search", "search bounds need 0 < d_min < d_max, got [" + describe(lower) +
                                            ", " + describe(upper) + "]");
    }
    if (!(rel_tol > 0.0)) {
        throw ValidationError("search.rel_tol", "search.rel_tol must be > 0");
    }
    if (max_iter < 1) {
        throw ValidationError("search.max_iter", "search.max_iter must be >= 1");
    }
}

BoundaryOptimumError::BoundaryOptimumError(Bound bound, OptimumDesign design)
    : Error("boundary_optimum",
            std::string("cost minimum lies on the ") + (bound == Bound::lower ? "lower" : "upper") +
                " search bound d_" + (bound == Bound::lower ? "min" : "max") + " = " +
                describe(design.aperture) + " m"),
      bound_(bound),
      design_(std::move(design)) {}

OptimumDesign minimize_cost_numeric(const CostProblem& problem, const SearchSpec& search) {
    problem.validate();
    search.validate();

    const auto objective = [&problem](double aperture) {
        return cost_along_constraint(aperture, problem).total;
    };

    std::vector<double> grid(kScanPoints);
    const double ratio = std::log(search.upper / search.lower);
    for (int i = 0; i < kScanPoints; ++i) {
        grid[i] = search.lower * std::exp(ratio * i / (kScanPoints - 1));
    }
    grid.front() = search.lower;
    grid.back() = search.upper;

    int best = 0;
    double best_value = objective(grid[0]);
    for (int i = 1; i < kScanPoints; ++i) {
        const double value = objective(grid[i]);
        if (value < best_value) {
            best = i;
            best_value = value;
        }
    }
    const double lo = grid[std::max(best - 1, 0)];
    const double hi = grid[std::min(best + 1, kScanPoints - 1)];

    const LineMinimum line = golden_section_minimize(objective, lo, hi, search.rel_tol, search.max_iter);

    if (line.touches_lower && lo == search.lower) {
        throw BoundaryOptimumError(Bound::lower, design_at(search.lower, problem));
    }
    if (line.touches_upper && hi == search.upper) {
        throw BoundaryOptimumError(Bound::upper, design_at(search.upper, problem));
    }
    OptimumDesign design = design_at(line.x, problem);
    design.iterations = line.iterations;
    if (!line.converged) {
        throw ConvergenceError("golden-section search did not reach rel_tol " + describe(search.rel_tol) +
                                   " within " + std::to_string(search.max_iter) + " iterations",
                               std::move(design));
    }
    return design;
}

double second_derivative_at(double aperture, const CostProblem& problem) {
    if (!(aperture > 0.0)) {
        throw DomainError("second derivative needs d > 0, got " + describe(aperture));
    }
    const ReducedCoefficients k = reduced_coefficients(problem);
    return 2.0 * k.laser_per_beta2 * problem.beta * problem.beta / (aperture * aperture * aperture) +
           2.0 * k.optics;
}

void SpeedProblem::validate() const {
    if (!std::isfinite(budget) || budget <= 0.0) {
        throw InfeasibleError("budget must be > 0 USD, got " + describe(budget));
    }
    payload.validate();
    sail.validate();
    if (sail.diameter) {
        throw ValidationError("sail.D", "speed maximization sizes the sail to the payload; sail.D must be absent");
    }
    optics.validate();
    metrics.validate();
}

double beta_squared_at_budget(double aperture, const SpeedProblem& problem) {
    const double a2_area = problem.metrics.optics * problem.optics.shape_factor;
    const double spend = problem.budget * aperture - a2_area * aperture * aperture * aperture;
    return eta(problem.sail) * spend /
           (2.0 * c * c * c * problem.optics.wavelength * problem.optics.diffraction_factor *
            (problem.metrics.laser / problem.optics.main_beam_fraction) *
            std::sqrt(problem.sail.areal_mass_factor() * problem.payload.mass));
}

SpeedMaxResult maximize_speed_fixed_cost(const SpeedProblem& problem) {
    problem.validate();
    require_speed_metrics(problem.metrics);
    const double aperture =
        std::sqrt(problem.budget / (3.0 * problem.metrics.optics * problem.optics.shape_factor));
    return speed_result_at(aperture, problem, OptimumMethod::closed_form);
}

SpeedMaxResult maximize_speed_numeric(const SpeedProblem& problem, double rel_tol, int max_iter) {
    problem.validate();
    require_speed_metrics(problem.metrics);
    const double limit = std::sqrt(problem.budget / (problem.metrics.optics * problem.optics.shape_factor));
    const auto negated = [&problem](double aperture) { return -beta_squared_at_budget(aperture, problem); };
    const LineMinimum line = golden_section_minimize(negated, 0.0, limit, rel_tol, max_iter);
    if (!line.converged) {
        throw ConvergenceError("speed maximization did not converge", OptimumDesign{});
    }
    return speed_result_at(line.x, problem, OptimumMethod::numeric);
}

}  // namespace sailcost
