#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "sailcost/errors.hpp"
#include "sailcost/optimizer.hpp"
#include "support.hpp"

using namespace sailcost;
using sailcost::support::example_problem;
using sailcost::support::rel;

namespace {

SpeedProblem speed_problem(double budget, double laser_cost = 1.0) {
    const CostProblem p = example_problem(laser_cost);
    return SpeedProblem{budget, p.payload, p.sail, p.optics, p.metrics};
}

}  // namespace

TEST(GoldenSection, FindsParabolaVertex) {
    const LineMinimum m = golden_section_minimize([](double x) { return (x - 3.0) * (x - 3.0); }, 0.0, 10.0, 1e-10, 200);
    EXPECT_TRUE(m.converged);
    EXPECT_NEAR(m.x, 3.0, 1e-7);
    EXPECT_FALSE(m.touches_lower);
    EXPECT_FALSE(m.touches_upper);
}

TEST(GoldenSection, MonotoneObjectiveTouchesBound) {
    const LineMinimum m = golden_section_minimize([](double x) { return x; }, 1.0, 2.0, 1e-12, 200);
    EXPECT_TRUE(m.touches_lower);
    EXPECT_EQ(m.x, 1.0);
}

TEST(GoldenSection, FlatObjectiveResolvesLeft) {
    const LineMinimum m = golden_section_minimize([](double) { return 1.0; }, 1.0, 2.0, 1e-12, 200);
    EXPECT_EQ(m.x, 1.0);
}

TEST(GoldenSection, ReportsExhaustedIterations) {
    const LineMinimum m = golden_section_minimize([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, 1e-14, 5);
    EXPECT_FALSE(m.converged);
    EXPECT_EQ(m.iterations, 5);
}

TEST(NumericMinimizer, WorkedExamples) {
    const CostProblem one = example_problem(1.0);
    EXPECT_LE(rel(minimize_cost_numeric(one).aperture, closed_form_optimum(one).aperture), 1e-6);
    const OptimumDesign two = minimize_cost_numeric(example_problem(0.1));
    EXPECT_LE(rel(two.aperture, 4.2e3), 0.02);
    EXPECT_EQ(two.method, OptimumMethod::numeric);
}

TEST(NumericMinimizer, PureQuadraticEndsOnLowerBound) {
    CostProblem p = example_problem(1.0);
    p.metrics.laser = 0.0;
    SearchSpec search;
    search.lower = 1.0;
    search.upper = 100.0;
    try {
        (void)minimize_cost_numeric(p, search);
        FAIL() << "expected BoundaryOptimumError";
    } catch (const BoundaryOptimumError& e) {
        EXPECT_EQ(e.bound(), Bound::lower);
        EXPECT_EQ(e.design().aperture, 1.0);
        EXPECT_EQ(e.code(), "boundary_optimum");
    }
}

TEST(NumericMinimizer, OptimumBeyondUpperBound) {
    SearchSpec search;
    search.upper = 1000.0;
    try {
        (void)minimize_cost_numeric(example_problem(1.0), search);
        FAIL() << "expected BoundaryOptimumError";
    } catch (const BoundaryOptimumError& e) {
        EXPECT_EQ(e.bound(), Bound::upper);
        EXPECT_EQ(e.design().aperture, 1000.0);
    }
}

TEST(NumericMinimizer, IterationLimitRaisesConvergenceError) {
    SearchSpec search;
    search.max_iter = 3;
    EXPECT_THROW((void)minimize_cost_numeric(example_problem(1.0), search), ConvergenceError);
}

TEST(NumericMinimizer, RejectsBadSearchSpec) {
    SearchSpec search;
    search.lower = 10.0;
    search.upper = 5.0;
    EXPECT_THROW((void)minimize_cost_numeric(example_problem(1.0), search), ValidationError);
}

TEST(SecondDerivative, QuadraticLimit) {
    CostProblem p = example_problem(1.0);
    p.metrics.laser = 0.0;
    EXPECT_EQ(second_derivative_at(1234.0, p), 2.0 * 1000.0 * circular_shape_factor);
}

TEST(SpeedMax, OpticsTakeOneThirdOfBudget) {
    const SpeedMaxResult r = maximize_speed_fixed_cost(speed_problem(1e11));
    EXPECT_LE(rel(r.breakdown.optics, 1e11 / 3.0), 1e-9);
    EXPECT_LE(rel(r.breakdown.laser + r.breakdown.optics, 1e11), 1e-12);
}

TEST(SpeedMax, QuadrupleBudgetDoublesAperture) {
    const double one = maximize_speed_fixed_cost(speed_problem(1e10)).aperture;
    EXPECT_NEAR(maximize_speed_fixed_cost(speed_problem(4e10)).aperture / one, 2.0, 1e-14);
}

TEST(SpeedMax, DualityWithCostMinimum) {
    const SpeedMaxResult r = maximize_speed_fixed_cost(speed_problem(1.93e11));
    CostProblem p = example_problem(1.0);
    p.beta = r.beta;
    EXPECT_LE(rel(closed_form_optimum(p).breakdown.total, 1.93e11), 1e-6);
    EXPECT_NEAR(r.beta, 0.2, 0.002);
}

TEST(SpeedMax, NumericAgreesWithClosedForm) {
    const SpeedMaxResult closed = maximize_speed_fixed_cost(speed_problem(5e10, 0.3));
    const SpeedMaxResult numeric = maximize_speed_numeric(speed_problem(5e10, 0.3));
    EXPECT_LE(rel(numeric.aperture, closed.aperture), 1e-6);
    EXPECT_LE(rel(numeric.beta, closed.beta), 1e-9);
}

TEST(SpeedMax, ErrorCases) {
    EXPECT_THROW((void)maximize_speed_fixed_cost(speed_problem(0.0)), InfeasibleError);
    SpeedProblem free_laser = speed_problem(1e10);
    free_laser.metrics.laser = 0.0;
    EXPECT_THROW((void)maximize_speed_fixed_cost(free_laser), DegenerateOptimumError);
    EXPECT_THROW((void)maximize_speed_fixed_cost(speed_problem(1e20)), DomainError);
}

TEST(OptimizerProperty, NumericMatchesClosedFormOnRandomProblems) {
    support::Gen gen(41);
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 1000; ++i) {
        const CostProblem p = gen.cost_problem();
        const OptimumDesign numeric = minimize_cost_numeric(p);
        EXPECT_LE(rel(numeric.aperture, support::oracle_optimum_aperture(p)), 1e-6);
        EXPECT_LE(rel(numeric.aperture, closed_form_optimum(p).aperture), 1e-6);
    }
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(OptimizerProperty, EnergyTermsDoNotMoveTheMinimum) {
    support::Gen gen(42);
    for (int i = 0; i < 300; ++i) {
        CostProblem p = gen.cost_problem();
        const double without = minimize_cost_numeric(p).aperture;
        p.metrics.energy = gen.log_uniform(1e-9, 1e-6);
        p.metrics.storage = gen.log_uniform(1e-6, 1e-3);
        p.metrics.shots = static_cast<double>(gen.integer(1, 1000));
        p.metrics.storage_efficiency = gen.uniform(0.3, 1.0);
        EXPECT_LE(rel(minimize_cost_numeric(p).aperture, without), 1e-6);
    }
}

TEST(OptimizerProperty, SecondDerivativeMatchesFiniteDifferences) {
    support::Gen gen(43);
    for (int i = 0; i < 500; ++i) {
        const CostProblem p = gen.cost_problem();
        const double d = closed_form_optimum(p).aperture;
        const double h = 1e-3 * d;
        const double fd = (support::oracle_cost(p, d + h) - 2.0 * support::oracle_cost(p, d) +
                           support::oracle_cost(p, d - h)) /
                          (h * h);
        const double exact = second_derivative_at(d, p);
        EXPECT_GT(exact, 0.0);
        EXPECT_LE(rel(exact, fd), 1e-4);
    }
}

TEST(OptimizerProperty, SpeedMaxSplitsBudgetOneThirdTwoThirds) {
    support::Gen gen(44);
    for (int i = 0; i < 500; ++i) {
        const CostProblem p = gen.cost_problem();
        const SpeedProblem sp{gen.log_uniform(1e7, 1e11), p.payload, p.sail, p.optics, p.metrics};
        SpeedMaxResult r;
        try {
            r = maximize_speed_fixed_cost(sp);
        } catch (const DomainError&) {
            continue;
        }
        EXPECT_LE(rel(r.breakdown.optics, sp.budget / 3.0), 1e-9);
        CostProblem back = p;
        back.beta = r.beta;
        EXPECT_LE(rel(closed_form_optimum(back).breakdown.total, sp.budget), 1e-6);
    }
}
