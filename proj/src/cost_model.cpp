#include "sailcost/cost_model.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "sailcost/errors.hpp"

namespace sailcost {

namespace {

constexpr double c = speed_of_light;

std::string describe(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

void require_nonnegative(double value, const char* field) {
    if (!std::isfinite(value) || value < 0.0) {
        throw ValidationError(field, std::string(field) + " must be finite and >= 0, got " +
                                         describe(value));
    }
}

void require_beta(double beta) {
    if (!std::isfinite(beta) || beta <= 0.0 || beta >= 1.0) {
        throw DomainError("beta0 must lie in (0, 1), got " + describe(beta));
    }
}

// lambda alpha_d / (xi_arr eta) * sqrt(xi h rho m0), the geometric core of d*^3 / (c beta0)^2.
double aperture_core(const CostProblem& problem) {
    return problem.optics.wavelength * problem.optics.diffraction_factor /
           (problem.optics.shape_factor * eta(problem.sail)) *
           std::sqrt(problem.sail.areal_mass_factor() * problem.payload.mass);
}

}  // namespace

std::string_view to_string(OptimumMethod method) {
    return method == OptimumMethod::closed_form ? "closed-form" : "numeric";
}

void CostMetrics::validate() const {
    require_nonnegative(laser, "metrics.a1");
    require_nonnegative(optics, "metrics.a2");
    require_nonnegative(energy, "metrics.a3");
    require_nonnegative(storage, "metrics.a4");
    if (!std::isfinite(storage_efficiency) || storage_efficiency <= 0.0 || storage_efficiency > 1.0) {
        throw ValidationError("metrics.eps_storage", "metrics.eps_storage must lie in (0, 1], got " +
                                                         describe(storage_efficiency));
    }
    if (!std::isfinite(shots) || shots < 1.0) {
        throw ValidationError("metrics.N_shot",
                              "metrics.N_shot must be >= 1, got " + describe(shots));
    }
    const std::pair<double, const char*> reserved[] = {
        {personnel, "metrics.personnel"},
        {land, "metrics.land"},
        {launch, "metrics.launch"},
        {payload, "metrics.payload"},
    };
    for (const auto& [value, field] : reserved) {
        if (value != 0.0) {
            throw ValidationError(field, std::string(field) +
                                             " is a reserved cost item and must be 0, got " +
                                             describe(value));
        }
    }
}

void CostProblem::validate() const {
    require_beta(beta);
    payload.validate();
    sail.validate();
    if (sail.diameter) {
        throw ValidationError("sail.D", "cost optimization sizes the sail to the payload; sail.D must be absent");
    }
    optics.validate();
    metrics.validate();
}

CostBreakdown cost_components(double power, double time, double aperture, const CostMetrics& metrics,
                              const ArrayOptics& optics) {
    if (!(optics.main_beam_fraction > 0.0)) {
        throw ValidationError("array.eps_b", "array.eps_b must be > 0");
    }
    CostBreakdown costs;
    const double photon_energy = power * time;
    costs.laser = metrics.laser * power / optics.main_beam_fraction;
    costs.optics = metrics.optics * optics.shape_factor * aperture * aperture;
    costs.energy = metrics.shots * metrics.energy * photon_energy;
    costs.storage = metrics.storage * photon_energy / metrics.storage_efficiency;
    costs.total = costs.laser + costs.optics + costs.energy + costs.storage;
    if (!std::isfinite(costs.total)) {
        throw NumericRangeError("total cost is not finite");
    }
    if (costs.total > 0.0) {
        costs.fractions = {costs.laser / costs.total, costs.optics / costs.total,
                           costs.energy / costs.total, costs.storage / costs.total};
    } else {
        costs.zero_total = true;
    }
    return costs;
}

ReducedCoefficients reduced_coefficients(const CostProblem& problem) {
    ReducedCoefficients k;
    k.laser_per_speed2 = problem.metrics.laser / problem.optics.main_beam_fraction * 2.0 * c *
                         problem.optics.wavelength * problem.optics.diffraction_factor /
                         eta(problem.sail) *
                         std::sqrt(problem.sail.areal_mass_factor() * problem.payload.mass);
    k.optics = problem.metrics.optics * problem.optics.shape_factor;
    k.laser_per_beta2 = k.laser_per_speed2 * c * c;
    return k;
}

CostBreakdown cost_along_constraint(double aperture, const CostProblem& problem) {
    ArraySpec array;
    array.optics = problem.optics;
    array.aperture = aperture;
    array.power = required_power(problem.beta, problem.optics, aperture, problem.sail, problem.payload);
    const KinematicsResult motion = kinematics_optimized(array, problem.sail, problem.payload);
    return cost_components(array.power, motion.time, aperture, problem.metrics, problem.optics);
}

OptimumDesign closed_form_optimum(const CostProblem& problem) {
    problem.validate();
    const double a1 = problem.metrics.laser;
    const double a2 = problem.metrics.optics;
    if (a1 == 0.0 || a2 == 0.0) {
        throw DegenerateOptimumError(
            std::string("closed-form optimum needs a1 > 0 and a2 > 0 (") +
            (a1 == 0.0 ? "a1" : "a2") +
            " = 0 puts the minimum on a search boundary); use the bounded numeric search");
    }

    OptimumDesign design;
    design.method = OptimumMethod::closed_form;
    design.coefficients = reduced_coefficients(problem);
    design.aperture = c * std::cbrt(problem.beta * problem.beta) *
                      std::cbrt(a1 / (problem.optics.main_beam_fraction * a2)) *
                      std::cbrt(aperture_core(problem));

    ArraySpec array;
    array.optics = problem.optics;
    array.aperture = design.aperture;
    array.power = required_power(problem.beta, problem.optics, design.aperture, problem.sail,
                                 problem.payload);
    design.power = array.power;
    design.kinematics = kinematics_optimized(array, problem.sail, problem.payload);
    design.breakdown = cost_components(design.power, design.kinematics.time, design.aperture,
                                       problem.metrics, problem.optics);
    return design;
}

double a1_for_budget(double budget, double beta, double optics_cost, const ArrayOptics& optics,
                     const SailSpec& sail, const Payload& payload) {
    require_beta(beta);
    if (!std::isfinite(budget) || budget <= 0.0) {
        throw DomainError("budget must be finite and > 0, got " + describe(budget));
    }
    if (!std::isfinite(optics_cost) || optics_cost <= 0.0) {
        throw DomainError("a2 must be finite and > 0, got " + describe(optics_cost));
    }
    optics.validate();
    sail.validate();
    payload.validate();

    // At the optimum C_T = 3 C2 = 3 a2 xi_arr d*^2; invert d*(a1) for a1.
    CostProblem probe;
    probe.optics = optics;
    probe.sail = sail;
    probe.payload = payload;
    const double core = aperture_core(probe);
    const double aperture_sq = budget / (3.0 * optics_cost * optics.shape_factor);
    const double aperture = std::sqrt(aperture_sq);
    // d*^3 = c^3 beta^2 (a1 / (eps_b a2)) core
    return optics.main_beam_fraction * optics_cost * aperture * aperture_sq /
           (c * c * c * beta * beta * core);
}

}  // namespace sailcost
