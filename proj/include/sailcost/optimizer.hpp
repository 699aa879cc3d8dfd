#pragma once

// Numerical optimization along the power-aperture constraint. Serves as the
// independent oracle for the closed forms in cost_model.

#include <cmath>
#include <string>

#include "sailcost/cost_model.hpp"
#include "sailcost/errors.hpp"

namespace sailcost {

struct SearchSpec {
    double lower = 1.0;     // d_min, m
    double upper = 1e7;     // d_max, m
    double rel_tol = 1e-10;
    int max_iter = 200;

    void validate() const;
};

enum class Bound { lower, upper };

/// The minimum lies on a search bound; `design()` holds the design at that bound.
class BoundaryOptimumError : public Error {
public:
    BoundaryOptimumError(Bound bound, OptimumDesign design);

    [[nodiscard]] Bound bound() const noexcept { return bound_; }
    [[nodiscard]] const OptimumDesign& design() const noexcept { return design_; }

private:
    Bound bound_;
    OptimumDesign design_;
};

/// Golden-section refinement ran out of iterations; `best()` is the best point seen.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& message, OptimumDesign best)
        : Error("convergence_error", message), best_(std::move(best)) {}

    [[nodiscard]] const OptimumDesign& best() const noexcept { return best_; }

private:
    OptimumDesign best_;
};

struct LineMinimum {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
    bool touches_lower = false;  // final bracket still starts at the initial lower end
    bool touches_upper = false;
};

/// Golden-section search for the minimum of a unimodal `f` on [lo, hi].
/// Stops when the bracket width falls below rel_tol * |midpoint|. Ties keep
/// the left sub-interval, so flat regions resolve to the smallest x.
template <typename F>
[[nodiscard]] LineMinimum golden_section_minimize(F&& f, double lo, double hi, double rel_tol,
                                                  int max_iter) {
    constexpr double inv_phi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2
    const double lo0 = lo;
    const double hi0 = hi;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);

    LineMinimum result;
    while (result.iterations < max_iter) {
        if (hi - lo <= rel_tol * std::abs(0.5 * (lo + hi))) {
            result.converged = true;
            break;
        }
        ++result.iterations;
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    if (!result.converged && hi - lo <= rel_tol * std::abs(0.5 * (lo + hi))) {
        result.converged = true;
    }
    result.touches_lower = lo == lo0;
    result.touches_upper = hi == hi0;
    result.x = result.touches_lower ? lo : (result.touches_upper ? hi : 0.5 * (lo + hi));
    result.value = f(result.x);
    return result;
}

/// Minimizes C_T(d) along the physics constraint: a coarse geometric scan
/// picks a three-point bracket, golden-section refines it.
/// Throws BoundaryOptimumError when the minimum is on d_min or d_max and
/// ConvergenceError when max_iter is exhausted.
[[nodiscard]] OptimumDesign minimize_cost_numeric(const CostProblem& problem,
                                                  const SearchSpec& search = {});

/// Analytic d^2 C_T / dd^2 = 2 b1' beta0^2 / d^3 + 2 a2 xi_arr.
[[nodiscard]] double second_derivative_at(double aperture, const CostProblem& problem);

/// Fixed budget, free speed.
struct SpeedProblem {
    double budget = 0.0;  // C_T for laser plus optics, USD
    Payload payload;
    SailSpec sail;
    ArrayOptics optics;
    CostMetrics metrics;

    void validate() const;
};

struct SpeedMaxResult {
    double aperture = 0.0;  // d*, m
    double power = 0.0;     // P0*, W
    double beta = 0.0;      // beta0*
    CostBreakdown breakdown;
    KinematicsResult kinematics;
    OptimumMethod method = OptimumMethod::closed_form;
};

/// beta0^2 reached when the budget buys aperture d and spends the rest on laser power:
/// eta (C_T d - a2 xi_arr d^3) / (2 c^3 lambda alpha_d (a1/eps_b) sqrt(xi h rho m0)).
[[nodiscard]] double beta_squared_at_budget(double aperture, const SpeedProblem& problem);

/// Closed form: d* = sqrt(C_T / (3 a2 xi_arr)), optics take one third of the budget.
/// The budget covers C1 + C2; energy terms in the returned breakdown come on top.
[[nodiscard]] SpeedMaxResult maximize_speed_fixed_cost(const SpeedProblem& problem);

/// Golden-section maximization of beta0^2(d) over (0, sqrt(C_T / (a2 xi_arr))).
[[nodiscard]] SpeedMaxResult maximize_speed_numeric(const SpeedProblem& problem,
                                                    double rel_tol = 1e-10, int max_iter = 200);

}  // namespace sailcost
