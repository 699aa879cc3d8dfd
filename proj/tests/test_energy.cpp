#include <gtest/gtest.h>

#include <cmath>

#include "sailcost/energy.hpp"
#include "sailcost/errors.hpp"
#include "support.hpp"

using namespace sailcost;
using sailcost::support::c;
using sailcost::support::example_problem;
using sailcost::support::rel;

namespace {

SailSpec example_sail() {
    SailSpec s;
    s.thickness = 1e-6;
    s.density = 1000.0;
    return s;
}

double storage_for(double m0, double a4 = 2.8e-5) {
    const ArraySpec a{ArrayOptics{}, 1e4, 1e11};
    const KinematicsResult k = kinematics_optimized(a, example_sail(), Payload{m0});
    return storage_cost(energy_at_operating_point(k, a.power), a4);
}

}  // namespace

TEST(ShotEnergy, PerfectReflectorEfficiencyEqualsBeta) {
    const ShotEnergy e = energy_per_shot(0.2, 2e-3, 2.0);
    EXPECT_NEAR(e.launch_efficiency, 0.2, 1e-15);
    EXPECT_LE(rel(e.photon_energy, 0.2 * 1e-3 * c * c), 1e-15);
    EXPECT_NEAR(e.photon_energy, 1.797e13, 0.001e13);
}

TEST(ShotEnergy, ZeroSpeed) {
    const ShotEnergy e = energy_per_shot(0.0, 2e-3, 2.0);
    EXPECT_EQ(e.photon_energy, 0.0);
    EXPECT_EQ(e.kinetic_energy, 0.0);
}

TEST(ShotEnergy, StorageEfficiencyInflatesStoredEnergy) {
    const ShotEnergy e = energy_per_shot(0.1, 1e-2, 1.5, 0.25);
    EXPECT_DOUBLE_EQ(e.storage_energy, 4.0 * e.photon_energy);
    EXPECT_THROW((void)energy_per_shot(0.1, 1e-2, 1.5, 0.0), DomainError);
}

TEST(StorageCost, HundredGigawattTenKilometreExample) {
    EXPECT_LE(rel(storage_for(1e-3), 0.47e9), 0.01);
    EXPECT_LE(rel(storage_for(1e-3), 0.5e9), 0.10);
    EXPECT_EQ(storage_for(1e-3, 0.0), 0.0);
}

TEST(StorageCost, KilogramVersusGramRatio) {
    EXPECT_LE(rel(storage_for(1.0) / storage_for(1e-3), std::pow(1000.0, 0.75)), 1e-6);
    EXPECT_NEAR(storage_for(1.0) / storage_for(1e-3), 177.8, 0.05);
}

TEST(StorageCost, PhotonEnergyPrefactor) {
    support::Gen gen(51);
    for (int i = 0; i < 50; ++i) {
        SailSpec s = example_sail();
        s.thickness = gen.log_uniform(1e-7, 1e-5);
        s.density = gen.log_uniform(500.0, 5000.0);
        const ArraySpec a{ArrayOptics{}, gen.log_uniform(1e3, 3e4), gen.log_uniform(1e9, 1e11)};
        const double m0 = gen.log_uniform(1e-4, 1e-1);
        const KinematicsResult k = kinematics_optimized(a, s, Payload{m0});
        const double energy = energy_at_operating_point(k, a.power).photon_energy;
        const double shape = std::pow(m0 * 1e3, 0.75) * std::sqrt(a.power * 1e-9 * a.aperture * 1e-3 / (a.optics.wavelength * 1e6)) *
                             std::pow(s.thickness * 1e6 * s.density / 1000.0, -0.25);
        EXPECT_LE(rel(energy / shape, 5.3e11), 0.01);
    }
}

TEST(LifetimeEnergy, TenDollarsPerOpticalWatt) {
    const LifetimeEnergyCost cost = energy_used_lifetime(1.0, 1e5, to_si(0.05, "USD/kWh"), 0.5);
    EXPECT_LE(rel(cost.per_optical_watt, 10.0), 1e-12);
    EXPECT_LE(rel(cost.per_electrical_watt, 5.0), 1e-12);
    EXPECT_LE(rel(energy_used_lifetime(1.0, 1e5, to_si(0.05, "USD/kWh"), 1.0).per_optical_watt, 5.0), 1e-12);
}

TEST(LifetimeEnergy, RoundedPriceGivesTenPointZeroEight) {
    const LifetimeEnergyCost cost = energy_used_lifetime(1.0, 1e5, 1.4e-8, 0.5);
    EXPECT_LE(rel(cost.per_optical_watt, 10.08), 1e-12);
}

TEST(LifetimeEnergy, ZeroLifetime) {
    EXPECT_EQ(energy_used_lifetime(1e11, 0.0, 1.4e-8, 0.5).total, 0.0);
    EXPECT_THROW((void)energy_used_lifetime(1e11, 1.0, 1.4e-8, 0.0), DomainError);
}

TEST(TotalCostWithEnergy, ReducesToLaserPlusOptics) {
    CostMetrics m;
    m.laser = 1.0;
    m.optics = 1000.0;
    const CostBreakdown b = total_cost_with_energy(1e11, 1e4, 150.0, m, ArrayOptics{});
    EXPECT_DOUBLE_EQ(b.total, 1e11 + 1000.0 * circular_shape_factor * 1e8);
}

TEST(TotalCostWithEnergy, DoublingShotsAddsOneShotOfEnergyCost) {
    CostMetrics m;
    m.laser = 1.0;
    m.optics = 1000.0;
    m.energy = 1.4e-8;
    m.storage = 2.8e-5;
    const CostBreakdown one = total_cost_with_energy(1e11, 1e4, 150.0, m, ArrayOptics{});
    m.shots = 2.0;
    const CostBreakdown two = total_cost_with_energy(1e11, 1e4, 150.0, m, ArrayOptics{});
    EXPECT_LE(rel(two.total - one.total, 1.4e-8 * 1e11 * 150.0), 1e-6);
}

TEST(EnergyProperty, OperatingPointMatchesMomentumBudget) {
    support::Gen gen(52);
    for (int i = 0; i < 500; ++i) {
        const CostProblem p = gen.cost_problem();
        const ArraySpec a{p.optics, gen.log_uniform(100.0, 1e5), gen.log_uniform(1e6, 1e10)};
        const KinematicsResult k = kinematics_optimized(a, p.sail, p.payload);
        const ShotEnergy from_point = energy_at_operating_point(k, a.power);
        const ShotEnergy from_speed = energy_per_shot(k.beta, k.total_mass, support::oracle_eta(p.sail));
        EXPECT_LE(rel(from_point.photon_energy, from_speed.photon_energy), 1e-12);
        EXPECT_LE(rel(from_speed.launch_efficiency, support::oracle_eta(p.sail) * k.beta / 2.0), 1e-12);
    }
}
