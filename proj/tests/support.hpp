#pragma once

// Shared generators and independent reference formulas for the test suites.

#include <cmath>
#include <cstdint>
#include <random>

#include "sailcost/cost_model.hpp"

namespace sailcost::support {

inline constexpr double c = 299'792'458.0;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// Valid optimized-sail cost problem whose optimum lies well inside [1 m, 1e7 m].
    CostProblem cost_problem() {
        CostProblem p;
        p.beta = log_uniform(0.01, 0.3);
        p.payload.mass = log_uniform(1e-4, 1.0);
        p.sail.thickness = log_uniform(1e-7, 1e-5);
        p.sail.density = log_uniform(500.0, 5000.0);
        p.sail.reflectivity = uniform(0.5, 1.0);
        p.sail.absorptivity = uniform(0.0, 0.5);
        p.sail.shape_factor = uniform(0.5, 1.0);
        p.optics.wavelength = log_uniform(0.5e-6, 2e-6);
        p.optics.diffraction_factor = uniform(1.0, 1.5);
        p.optics.shape_factor = uniform(0.5, 1.0);
        p.optics.main_beam_fraction = uniform(0.5, 1.0);
        p.metrics.laser = log_uniform(0.01, 10.0);
        p.metrics.optics = log_uniform(10.0, 1e4);
        return p;
    }

private:
    std::mt19937_64 rng_;
};

inline CostProblem example_problem(double laser_cost = 1.0) {
    CostProblem p;
    p.beta = 0.2;
    p.payload.mass = 1e-3;
    p.sail.thickness = 1e-6;
    p.sail.density = 1000.0;
    p.optics.wavelength = 1e-6;
    p.optics.diffraction_factor = 1.22;
    p.metrics.laser = laser_cost;
    p.metrics.optics = 1000.0;
    return p;
}

inline double oracle_eta(const SailSpec& s) { return 2.0 * s.reflectivity + (1.0 - s.reflectivity) * s.absorptivity; }

/// P0 d held fixed by the target speed for the mass-matched sail.
inline double oracle_power_times_aperture(const CostProblem& p) {
    const double v = p.beta * c;
    const double areal = p.sail.shape_factor * p.sail.thickness * p.sail.density;
    return 2.0 * c * p.optics.wavelength * p.optics.diffraction_factor * v * v * std::sqrt(areal * p.payload.mass) /
           oracle_eta(p.sail);
}

/// Minimizer of A/d + B d^2 with A = (a1/eps_b) P0 d and B = a2 xi_arr.
inline double oracle_optimum_aperture(const CostProblem& p) {
    const double a = p.metrics.laser / p.optics.main_beam_fraction * oracle_power_times_aperture(p);
    const double b = p.metrics.optics * p.optics.shape_factor;
    return std::cbrt(a / (2.0 * b));
}

inline double oracle_cost(const CostProblem& p, double d) {
    return p.metrics.laser / p.optics.main_beam_fraction * oracle_power_times_aperture(p) / d +
           p.metrics.optics * p.optics.shape_factor * d * d;
}

inline double rel(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

}  // namespace sailcost::support
