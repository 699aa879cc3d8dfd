#include "sailcost/energy.hpp"

#include <cmath>
#include <string>

#include "sailcost/errors.hpp"

namespace sailcost {

namespace {

constexpr double c = speed_of_light;

void require_storage_efficiency(double storage_efficiency) {
    if (!(storage_efficiency > 0.0) || storage_efficiency > 1.0) {
        throw DomainError("storage efficiency must lie in (0, 1]");
    }
}

}  // namespace

ShotEnergy energy_per_shot(double beta, double total_mass, double eta, double storage_efficiency) {
    if (!(total_mass > 0.0)) {
        throw DomainError("energy per shot needs a positive accelerated mass");
    }
    if (!(beta >= 0.0) || beta >= 1.0) {
        throw DomainError("energy per shot needs 0 <= beta0 < 1");
    }
    if (!(eta > 0.0) || eta > 2.0) {
        throw DomainError("momentum coupling eta must lie in (0, 2]");
    }
    require_storage_efficiency(storage_efficiency);

    ShotEnergy shot;
    shot.photon_energy = beta * total_mass * c * c / eta;
    shot.storage_energy = shot.photon_energy / storage_efficiency;
    shot.kinetic_energy = 0.5 * total_mass * c * c * beta * beta;
    shot.launch_efficiency = shot.photon_energy > 0.0 ? shot.kinetic_energy / shot.photon_energy : 0.0;
    return shot;
}

ShotEnergy energy_at_operating_point(const KinematicsResult& motion, double power,
                                     double storage_efficiency) {
    require_storage_efficiency(storage_efficiency);
    ShotEnergy shot;
    shot.photon_energy = power * motion.time;
    shot.storage_energy = shot.photon_energy / storage_efficiency;
    shot.kinetic_energy = 0.5 * motion.total_mass * motion.speed * motion.speed;
    shot.launch_efficiency = shot.photon_energy > 0.0 ? shot.kinetic_energy / shot.photon_energy : 0.0;
    return shot;
}

double storage_cost(const ShotEnergy& shot, double storage_rate) {
    if (!(storage_rate >= 0.0)) {
        throw DomainError("storage cost rate a4 must be >= 0");
    }
    return storage_rate * shot.storage_energy;
}

LifetimeEnergyCost energy_used_lifetime(double optical_power, double lifetime_hours,
                                        double price_per_joule, double wall_plug_efficiency) {
    if (!(wall_plug_efficiency > 0.0) || wall_plug_efficiency > 1.0) {
        throw DomainError("wall-plug efficiency must lie in (0, 1]");
    }
    if (!(optical_power >= 0.0) || !(lifetime_hours >= 0.0) || !(price_per_joule >= 0.0)) {
        throw DomainError("optical power, lifetime and energy price must be >= 0");
    }
    const double seconds = lifetime_hours * 3600.0;
    LifetimeEnergyCost cost;
    cost.per_electrical_watt = seconds * price_per_joule;
    cost.per_optical_watt = cost.per_electrical_watt / wall_plug_efficiency;
    cost.total = optical_power * cost.per_optical_watt;
    return cost;
}

CostBreakdown total_cost_with_energy(double power, double aperture, double time,
                                     const CostMetrics& metrics, const ArrayOptics& optics) {
    return cost_components(power, time, aperture, metrics, optics);
}

}  // namespace sailcost
