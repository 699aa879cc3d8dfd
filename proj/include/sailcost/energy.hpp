#pragma once

// Energy per launch and the costs that scale with it.

#include "sailcost/cost_model.hpp"

namespace sailcost {

struct ShotEnergy {
    double photon_energy = 0.0;      // E_gamma, main-beam energy delivered up to t0, J
    double storage_energy = 0.0;     // E_gamma / eps_storage, J
    double kinetic_energy = 0.0;     // at t0, J
    double launch_efficiency = 0.0;  // KE / E_gamma
};

/// E_gamma = beta0 m c^2 / eta, KE = m c^2 beta0^2 / 2, efficiency = eta beta0 / 2.
/// `total_mass` is sail plus payload (2 m0 for the mass-matched sail).
[[nodiscard]] ShotEnergy energy_per_shot(double beta, double total_mass, double eta,
                                         double storage_efficiency = 1.0);

/// Same quantity from the operating point: E_gamma = P0 t0.
[[nodiscard]] ShotEnergy energy_at_operating_point(const KinematicsResult& motion, double power,
                                                   double storage_efficiency = 1.0);

/// a4 E_storage, USD.
[[nodiscard]] double storage_cost(const ShotEnergy& shot, double storage_rate);

struct LifetimeEnergyCost {
    double total = 0.0;                  // USD over the lifetime
    double per_optical_watt = 0.0;       // USD per W of optical output
    double per_electrical_watt = 0.0;    // USD per W drawn from the grid
};

/// Grid energy bought over `lifetime_hours` of continuous operation at optical
/// power `optical_power` and the given wall-plug efficiency.
[[nodiscard]] LifetimeEnergyCost energy_used_lifetime(double optical_power, double lifetime_hours,
                                                      double price_per_joule, double wall_plug_efficiency);

/// C_T = a1 P0/eps_b + a2 xi_arr d^2 + (N_shot a3 + a4/eps_storage) E_gamma with E_gamma = P0 t0.
[[nodiscard]] CostBreakdown total_cost_with_energy(double power, double aperture, double time,
                                                   const CostMetrics& metrics, const ArrayOptics& optics);

}  // namespace sailcost
