#include "sailcost/validation.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "sailcost/energy.hpp"
#include "sailcost/optimizer.hpp"
#include "sailcost/roadmap.hpp"

namespace sailcost {

namespace {

constexpr std::uint64_t kSeed = 20160401;

double rel_err(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, pattern, a, b, c);
    return buffer;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

CostProblem random_problem(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CostProblem p;
    p.beta = log_uniform(rng, 0.01, 0.3);
    p.payload.mass = log_uniform(rng, 1e-4, 1.0);
    p.sail.thickness = log_uniform(rng, 1e-7, 1e-5);
    p.sail.density = log_uniform(rng, 500.0, 5000.0);
    p.sail.reflectivity = 0.5 + 0.5 * unit(rng);
    p.sail.absorptivity = 0.5 * unit(rng);
    p.optics.wavelength = log_uniform(rng, 0.5e-6, 2e-6);
    p.optics.main_beam_fraction = 0.5 + 0.5 * unit(rng);
    p.metrics.laser = log_uniform(rng, 0.01, 10.0);
    p.metrics.optics = log_uniform(rng, 10.0, 1e4);
    return p;
}

CheckResult check_example(int id, double laser_cost, double d_ref, double p_ref, double c_ref, double tol_d,
                          double tol_p, double tol_c) {
    CheckResult r{id, "worked example " + std::to_string(id), false, {}};
    const auto start = std::chrono::steady_clock::now();
    const OptimumDesign design = closed_form_optimum(worked_example_problem(laser_cost));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double ed = rel_err(design.aperture, d_ref);
    const double ep = rel_err(design.power, p_ref);
    const double ec = rel_err(design.breakdown.total, c_ref);
    r.passed = ed <= tol_d && ep <= tol_p && ec <= tol_c && seconds < 1.0;
    r.detail = fmt("d*=%.6g m P0*=%.6g W ", design.aperture, design.power) +
               fmt("C_T=%.6g USD (rel err %.2g/", design.breakdown.total, ed) + fmt("%.2g/%.2g)", ep, ec);
    return r;
}

CheckResult check_two_thirds() {
    CheckResult r{3, "two-thirds rule", false, {}};
    std::mt19937_64 rng(kSeed);
    double worst_split = 0.0;
    double worst_shift = 0.0;
    for (int i = 0; i < 50; ++i) {
        CostProblem p = random_problem(rng);
        const OptimumDesign closed = closed_form_optimum(p);
        worst_split = std::max(worst_split,
                               std::abs(closed.breakdown.laser - 2.0 * closed.breakdown.optics) / closed.breakdown.total);
        const OptimumDesign without = minimize_cost_numeric(p);
        p.metrics.energy = log_uniform(rng, 1e-9, 1e-7);
        p.metrics.storage = log_uniform(rng, 1e-6, 1e-4);
        const OptimumDesign with = minimize_cost_numeric(p);
        worst_shift = std::max(worst_shift, rel_err(with.aperture, without.aperture));
    }
    r.passed = worst_split <= 1e-9 && worst_shift <= 1e-6;
    r.detail = fmt("max |C1-2C2|/C_T=%.2g, max d shift with energy terms=%.2g", worst_split, worst_shift);
    return r;
}

CheckResult check_oracle() {
    CheckResult r{4, "closed form vs golden section", false, {}};
    std::mt19937_64 rng(kSeed + 1);
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const CostProblem p = random_problem(rng);
        worst = std::max(worst, rel_err(minimize_cost_numeric(p).aperture, closed_form_optimum(p).aperture));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = worst <= 1e-6 && seconds < 10.0;
    r.detail = fmt("1000 draws, max rel d* error=%.2g, %.2f s", worst, seconds);
    return r;
}

CheckResult check_speed_max() {
    CheckResult r{5, "fixed-cost speed maximum", false, {}};
    SpeedProblem sp;
    const CostProblem base = worked_example_problem(1.0);
    sp.budget = 1.0e11;
    sp.payload = base.payload;
    sp.sail = base.sail;
    sp.optics = base.optics;
    sp.metrics = base.metrics;
    const SpeedMaxResult best = maximize_speed_fixed_cost(sp);
    const double split = rel_err(best.breakdown.optics, sp.budget / 3.0);
    CostProblem back = base;
    back.beta = best.beta;
    const double round_trip = rel_err(closed_form_optimum(back).breakdown.total, sp.budget);
    r.passed = split <= 1e-9 && round_trip <= 1e-6;
    r.detail = fmt("beta0*=%.6g, |C2-C_T/3| rel=%.2g, duality rel=%.2g", best.beta, split, round_trip);
    return r;
}

CheckResult check_kinematics() {
    CheckResult r{6, "kinematics invariants", false, {}};
    const CostProblem p = worked_example_problem(1.0);
    ArraySpec array{p.optics, 1.0e4, 1.0e11};
    const KinematicsResult opt = kinematics_optimized(array, p.sail, p.payload);
    const double coast = rel_err(opt.coast_speed, std::sqrt(2.0) * opt.speed);
    SailSpec fixed = p.sail;
    fixed.diameter = matched_sail_diameter(p.sail, p.payload);
    const KinematicsResult non = kinematics_non_optimized(array, fixed, p.payload);
    const double same = std::max({rel_err(non.speed, opt.speed), rel_err(non.time, opt.time),
                                  rel_err(non.distance, opt.distance)});

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const int n = 31;
    for (int i = 0; i < n; ++i) {
        Payload payload{1e-3 * std::pow(10.0, 3.0 * i / (n - 1))};
        const double x = std::log(payload.mass);
        const double y = std::log(kinematics_optimized(array, p.sail, payload).time);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    r.passed = coast <= 1e-12 && same <= 1e-10 && std::abs(slope - 0.75) <= 1e-6;
    r.detail = fmt("v_inf rel=%.2g, opt vs non-opt rel=%.2g, t0 slope=%.9f", coast, same, slope);
    return r;
}

CheckResult check_energy() {
    CheckResult r{7, "energy and storage", false, {}};
    const CostProblem p = worked_example_problem(1.0);
    const ArraySpec array{p.optics, 1.0e4, 1.0e11};
    const double a4 = 2.8e-5;
    const auto storage_for = [&](double mass) {
        const KinematicsResult motion = kinematics_optimized(array, p.sail, Payload{mass});
        return storage_cost(energy_at_operating_point(motion, array.power), a4);
    };
    const double small = storage_for(1e-3);
    const double ratio = storage_for(1.0) / small;
    const double price = to_si(0.05, "USD/kWh");
    const LifetimeEnergyCost lifetime = energy_used_lifetime(1.0, 1.0e5, price, 0.5);
    const bool storage_ok = rel_err(small, 0.5e9) <= 0.10;
    const bool ratio_ok = rel_err(ratio, std::pow(1000.0, 0.75)) <= 1e-6;
    const bool lifetime_ok = rel_err(lifetime.per_optical_watt, 10.0) <= 1e-12;
    r.passed = storage_ok && ratio_ok && lifetime_ok;
    r.detail = fmt("storage=%.4g USD, 1 kg/1 g ratio=%.6g, ", small, ratio) +
               fmt("energy used=%.12g USD/W_opt at %.4g USD/J", lifetime.per_optical_watt, price);
    return r;
}

CheckResult check_scaling() {
    CheckResult r{8, "scaling laws", false, {}};
    const CostProblem p = worked_example_problem(1.0);
    CostProblem doubled = p;
    doubled.beta = 2.0 * p.beta;
    const double doubling = closed_form_optimum(doubled).breakdown.total / closed_form_optimum(p).breakdown.total;
    CostProblem s1 = p;
    s1.beta = 0.01;
    const double stage = closed_form_optimum(p).breakdown.total / closed_form_optimum(s1).breakdown.total;
    const double stage_rule = stage_cost_ratio(20.0, 1.0);
    const double budget = 5.0e10;
    CostProblem inverted = p;
    inverted.metrics.laser = a1_for_budget(budget, p.beta, p.metrics.optics, p.optics, p.sail, p.payload);
    const double round_trip = rel_err(closed_form_optimum(inverted).breakdown.total, budget);
    const double e1 = rel_err(doubling, std::pow(2.0, 4.0 / 3.0));
    const double e2 = std::max(rel_err(stage, std::pow(20.0, 4.0 / 3.0)), rel_err(stage_rule, std::pow(20.0, 4.0 / 3.0)));
    r.passed = e1 <= 1e-9 && e2 <= 1e-9 && round_trip <= 1e-6;
    r.detail = fmt("beta doubling=%.12g, Starlight-20/1=%.12g, a1 round trip rel=%.2g", doubling, stage, round_trip);
    return r;
}

CheckResult check_curvature() {
    CheckResult r{9, "second derivative at optimum", false, {}};
    std::mt19937_64 rng(kSeed + 2);
    double worst = 0.0;
    bool positive = true;
    for (int i = 0; i < 200; ++i) {
        const CostProblem p = random_problem(rng);
        const double d = closed_form_optimum(p).aperture;
        const double h = 1e-3 * d;
        const auto cost = [&](double x) { return cost_along_constraint(x, p).total; };
        const double fd = (cost(d + h) - 2.0 * cost(d) + cost(d - h)) / (h * h);
        const double exact = second_derivative_at(d, p);
        positive = positive && exact > 0.0;
        worst = std::max(worst, rel_err(fd, exact));
    }
    r.passed = positive && worst <= 1e-4;
    r.detail = fmt("200 draws, all positive=%g, max rel diff vs finite differences=%.2g", positive ? 1.0 : 0.0, worst);
    return r;
}

CheckResult guarded(int id, const char* name, const std::function<CheckResult()>& check) {
    try {
        return check();
    } catch (const std::exception& e) {
        return CheckResult{id, name, false, std::string("error: ") + e.what()};
    }
}

}  // namespace

CostProblem worked_example_problem(double laser_cost) {
    CostProblem p;
    p.beta = 0.2;
    p.payload.mass = 1e-3;
    p.sail.thickness = 1e-6;
    p.sail.density = 1000.0;
    p.sail.reflectivity = 1.0;
    p.sail.shape_factor = circular_shape_factor;
    p.optics.wavelength = 1e-6;
    p.optics.diffraction_factor = 1.22;
    p.optics.shape_factor = circular_shape_factor;
    p.metrics.laser = laser_cost;
    p.metrics.optics = 1000.0;
    return p;
}

std::vector<CheckResult> run_golden_checks() {
    return {
        guarded(1, "worked example 1", [] { return check_example(1, 1.0, 9.1e3, 128e9, 193e9, 0.02, 0.02, 0.02); }),
        guarded(2, "worked example 2", [] { return check_example(2, 0.1, 4.2e3, 272e9, 41e9, 0.02, 0.025, 0.025); }),
        guarded(3, "two-thirds rule", check_two_thirds),
        guarded(4, "closed form vs golden section", check_oracle),
        guarded(5, "fixed-cost speed maximum", check_speed_max),
        guarded(6, "kinematics invariants", check_kinematics),
        guarded(7, "energy and storage", check_energy),
        guarded(8, "scaling laws", check_scaling),
        guarded(9, "second derivative at optimum", check_curvature),
    };
}

}  // namespace sailcost
