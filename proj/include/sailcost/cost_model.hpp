#pragma once

// Separable system cost C_T = C1 + C2 + C3 + C4:
//
//   C1 = a1 P0 / eps_b                 laser (per optical watt)
//   C2 = a2 xi_arr d^2                 optics ("glass")
//   C3 = N_shot a3 P0 t0               grid energy over N_shot launches
//   C4 = a4 P0 t0 / eps_storage        storage sized for one launch
//
// With N_shot = 1 and eps_storage = 1 (the defaults) C3 and C4 reduce to
// a3 P0 t0 and a4 P0 t0.
//
// For a fixed target speed the physics ties power to aperture (P0 d is
// constant for the mass-matched sail), so C_T becomes a function of d alone:
//
//   C_T(d) = b1' beta0^2 / d + a2' d^2 + (energy terms, independent of d)
//
// whose minimum sits where C1 = 2 C2.

#include <array>
#include <string_view>

#include "sailcost/physics.hpp"

namespace sailcost {

struct CostMetrics {
    double laser = 0.0;               // a1, USD per optical W
    double optics = 0.0;              // a2, USD per m^2 of aperture
    double energy = 0.0;              // a3, USD per J drawn from the grid
    double storage = 0.0;             // a4, USD per J of storage capacity
    double storage_efficiency = 1.0;  // eps_storage, (0, 1]
    double shots = 1.0;               // N_shot, >= 1

    // Reserved cost items (personnel, land, launch, payload). Must be zero.
    double personnel = 0.0;
    double land = 0.0;
    double launch = 0.0;
    double payload = 0.0;

    void validate() const;

    /// Energy-dependent cost per joule of main-beam photon energy: N a3 + a4 / eps_storage.
    [[nodiscard]] double energy_rate() const { return shots * energy + storage / storage_efficiency; }

    friend bool operator==(const CostMetrics&, const CostMetrics&) = default;
};

struct CostBreakdown {
    double laser = 0.0;    // C1
    double optics = 0.0;   // C2
    double energy = 0.0;   // C3
    double storage = 0.0;  // C4
    double total = 0.0;    // C_T
    std::array<double, 4> fractions{};  // f1..f4, all zero when total == 0
    bool zero_total = false;
};

enum class OptimumMethod { closed_form, numeric };

[[nodiscard]] std::string_view to_string(OptimumMethod method);

/// Coefficients of the one-dimensional cost C_T(d) = a1' v0^2 / d + a2' d^2.
struct ReducedCoefficients {
    double laser_per_speed2 = 0.0;  // a1', USD m / (m/s)^2
    double optics = 0.0;            // a2' = a2 xi_arr, USD/m^2
    double laser_per_beta2 = 0.0;   // b1' = a1' c^2, USD m
};

struct OptimumDesign {
    double aperture = 0.0;  // d*, m
    double power = 0.0;     // P0*, W
    CostBreakdown breakdown;
    KinematicsResult kinematics;
    OptimumMethod method = OptimumMethod::closed_form;
    ReducedCoefficients coefficients;
    int iterations = 0;  // golden-section steps, numeric only
};

/// Everything a cost minimization at fixed outcome needs: target speed,
/// payload, mass-matched sail, array optics and unit costs.
struct CostProblem {
    double beta = 0.0;
    Payload payload;
    SailSpec sail;
    ArrayOptics optics;
    CostMetrics metrics;

    void validate() const;
};

/// C1..C4, C_T and fractions for a given operating point.
[[nodiscard]] CostBreakdown cost_components(double power, double time, double aperture,
                                            const CostMetrics& metrics, const ArrayOptics& optics);

[[nodiscard]] ReducedCoefficients reduced_coefficients(const CostProblem& problem);

/// Cost of the design with aperture `aperture` that reaches the target speed:
/// power from `required_power`, t0 from `kinematics_optimized`.
[[nodiscard]] CostBreakdown cost_along_constraint(double aperture, const CostProblem& problem);

/// Aperture minimizing C_T for the problem:
/// d* = c beta0^(2/3) (a1/(eps_b a2))^(1/3) [lambda alpha_d/(xi_arr eta) sqrt(xi h rho m0)]^(1/3).
/// Throws DegenerateOptimumError when a1 or a2 is zero.
[[nodiscard]] OptimumDesign closed_form_optimum(const CostProblem& problem);

/// Power-law exponents of the optimum in beta0, a1 and a2.
struct ScalingExponents {
    double beta;
    double laser;
    double optics;
};

struct CostScaling {
    ScalingExponents total;     // C_T
    ScalingExponents power;     // P0*
    ScalingExponents aperture;  // d*
};

[[nodiscard]] constexpr CostScaling cost_scaling_exponents() {
    return CostScaling{
        .total = {4.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0},
        .power = {4.0 / 3.0, -1.0 / 3.0, 1.0 / 3.0},
        .aperture = {2.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0},
    };
}

/// Laser cost metric a1 at which the minimum laser-plus-optics cost for `beta`
/// equals `budget`, given the optics cost `optics_cost`. Energy terms are not
/// part of this budget.
[[nodiscard]] double a1_for_budget(double budget, double beta, double optics_cost,
                                   const ArrayOptics& optics, const SailSpec& sail,
                                   const Payload& payload);

}  // namespace sailcost
