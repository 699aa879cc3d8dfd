#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sailcost/errors.hpp"
#include "sailcost/roadmap.hpp"
#include "support.hpp"

using namespace sailcost;
using sailcost::support::example_problem;
using sailcost::support::rel;

namespace {

TechCurve laser_curve(double base = 100.0) { return TechCurve{base, Month::from_year_month(2016, 1), 18.0}; }

double cost_at(double laser_cost, double beta = 0.2) {
    CostProblem p = example_problem(laser_cost);
    p.beta = beta;
    return closed_form_optimum(p).breakdown.total;
}

}  // namespace

TEST(Month, ParseAndFormat) {
    const Month m = Month::parse("2016-04");
    EXPECT_EQ(m.year(), 2016);
    EXPECT_EQ(m.month(), 4);
    EXPECT_EQ(m.to_string(), "2016-04");
    EXPECT_EQ(Month{m.index + 9}.to_string(), "2017-01");
    EXPECT_THROW((void)Month::parse("2016-13"), ConfigError);
    EXPECT_THROW((void)Month::parse("2016/04"), ConfigError);
    EXPECT_THROW((void)Month::parse("2016-4"), ConfigError);
}

TEST(Starlight, Designations) {
    EXPECT_DOUBLE_EQ(starlight_designation(0.01), 1.0);
    EXPECT_DOUBLE_EQ(starlight_designation(0.2), 20.0);
    EXPECT_DOUBLE_EQ(starlight_designation(0.001), 0.1);
    EXPECT_THROW((void)starlight_designation(1.0), DomainError);
}

TEST(Starlight, StageCostRatio) {
    EXPECT_NEAR(stage_cost_ratio(20.0, 1.0), 54.3, 0.05);
    EXPECT_LE(rel(stage_cost_ratio(20.0, 1.0), std::pow(20.0, 4.0 / 3.0)), 1e-15);
    EXPECT_EQ(stage_cost_ratio(7.0, 7.0), 1.0);
    EXPECT_NEAR(stage_cost_ratio(8.0, 1.0), 16.0, 1e-13);
    EXPECT_THROW((void)stage_cost_ratio(1.0, 2.0), DomainError);
}

TEST(TechCurve, Halving) {
    const TechCurve curve = laser_curve();
    EXPECT_DOUBLE_EQ(project_metric(curve, Month{curve.reference.index + 18}), 50.0);
    EXPECT_DOUBLE_EQ(project_metric(curve, curve.reference), 100.0);
    EXPECT_DOUBLE_EQ(project_metric(curve, Month{curve.reference.index - 18}), 200.0);
    EXPECT_FALSE(beyond_backward_horizon(curve, Month{curve.reference.index - 180}));
    EXPECT_TRUE(beyond_backward_horizon(curve, Month{curve.reference.index - 181}));
    EXPECT_THROW((void)project_metric(TechCurve{0.0, {}, 18.0}, Month{}), ValidationError);
}

TEST(TimeOfEntry, HundredToOneTenthDollarsPerWatt) {
    const EntryEstimate e = time_of_entry(laser_curve(100.0), cost_at(0.1), example_problem(1.0));
    EXPECT_NEAR(e.months_after_reference, 18.0 * std::log2(1000.0), 1e-9);
    EXPECT_NEAR(e.months_after_reference / 12.0, 14.9, 0.05);
    EXPECT_EQ(e.month.index, laser_curve().reference.index + 180);
    EXPECT_NEAR(e.required_laser_cost, 0.1, 1e-12);
}

TEST(TimeOfEntry, AffordableBudgetEntersAtReference) {
    const EntryEstimate e = time_of_entry(laser_curve(100.0), cost_at(100.0), example_problem(1.0));
    EXPECT_NEAR(e.months_after_reference, 0.0, 1e-9);
    EXPECT_EQ(e.month, laser_curve().reference);
    const EntryEstimate rich = time_of_entry(laser_curve(100.0), 10.0 * cost_at(100.0), example_problem(1.0));
    EXPECT_EQ(rich.months_after_reference, 0.0);
    EXPECT_EQ(rich.month, laser_curve().reference);
}

TEST(TimeOfEntry, HalvingBudgetDelaysTwentySevenMonths) {
    const double budget = cost_at(0.5);
    const double t1 = time_of_entry(laser_curve(), budget, example_problem(1.0)).months_after_reference;
    const double t2 = time_of_entry(laser_curve(), budget / 2.0, example_problem(1.0)).months_after_reference;
    EXPECT_NEAR(t2 - t1, 27.0, 1e-9);
}

TEST(TimeOfEntry, DoublingSpeedDelaysThirtySixMonths) {
    CostProblem fast = example_problem(1.0);
    fast.beta = 0.4;
    const double budget = cost_at(0.5);
    const double t1 = time_of_entry(laser_curve(), budget, example_problem(1.0)).months_after_reference;
    const double t2 = time_of_entry(laser_curve(), budget, fast).months_after_reference;
    EXPECT_NEAR(t2 - t1, 36.0, 1e-9);
}

TEST(TimeOfEntry, EnergyFloorMakesSmallBudgetsInfeasible) {
    CostProblem p = example_problem(1.0);
    p.metrics.storage = 2.8e-5;
    const double floor = 2.8e-5 * 2.0 * 0.2 * 1e-3 * support::c * support::c / 2.0;
    try {
        (void)time_of_entry(laser_curve(), 0.9 * floor, p);
        FAIL() << "expected InfeasibleError";
    } catch (const InfeasibleError& e) {
        EXPECT_LE(rel(e.asymptotic_minimum(), floor), 1e-12);
    }
    const EntryEstimate e = time_of_entry(laser_curve(), floor + cost_at(0.1), p);
    EXPECT_NEAR(e.required_laser_cost, 0.1, 1e-9);
}

TEST(TimeOfEntry, OpticsCurveCrossingSpendsTheBudget) {
    const TechCurve optics{1000.0, laser_curve().reference, 60.0};
    const double budget = 5e9;
    const EntryEstimate e = time_of_entry(laser_curve(), budget, example_problem(1.0), optics);
    CostProblem at_entry = example_problem(e.required_laser_cost);
    at_entry.metrics.optics = e.projected_optics_cost;
    EXPECT_LE(rel(closed_form_optimum(at_entry).breakdown.total, budget), 1e-9);
    EXPECT_LE(rel(e.projected_optics_cost, 1000.0 * std::exp2(-e.months_after_reference / 60.0)), 1e-12);
    const EntryEstimate flat = time_of_entry(laser_curve(), budget, example_problem(1.0));
    EXPECT_LT(e.months_after_reference, flat.months_after_reference);
}

TEST(PlanStages, LadderWithoutBudgetFollowsFourThirdsLaw) {
    const std::vector<double> x{1.0, 10.0, 20.0};
    const StagePlan plan = plan_stages(x, example_problem(1.0), laser_curve(1.0), std::nullopt, std::nullopt);
    ASSERT_EQ(plan.stages.size(), 3u);
    EXPECT_LE(rel(plan.stages[2].design.breakdown.total / plan.stages[0].design.breakdown.total,
                  stage_cost_ratio(20.0, 1.0)),
              1e-9);
    EXPECT_EQ(plan.stages[1].entry, laser_curve().reference);
}

TEST(PlanStages, LadderWithBudgetEntersInOrder) {
    const std::vector<double> x{1.0, 10.0, 20.0};
    const StagePlan plan = plan_stages(x, example_problem(1.0), laser_curve(10.0), std::nullopt, 1e10);
    for (std::size_t i = 1; i < plan.stages.size(); ++i) {
        EXPECT_GE(plan.stages[i].entry, plan.stages[i - 1].entry);
    }
    for (const Stage& stage : plan.stages) {
        EXPECT_LE(rel(stage.design.breakdown.total, 1e10), 1e-9);
    }
}

TEST(PlanStages, RejectsUnorderedDesignations) {
    const std::vector<double> x{10.0, 1.0};
    EXPECT_THROW((void)plan_stages(x, example_problem(1.0), laser_curve(), std::nullopt, std::nullopt), ValidationError);
}

TEST(RoadmapProperty, EntryTimeMatchesExponentialInverse) {
    support::Gen gen(61);
    for (int i = 0; i < 300; ++i) {
        CostProblem p = gen.cost_problem();
        const double base = gen.log_uniform(1.0, 1000.0);
        const TechCurve curve{base, Month::from_year_month(2016, 1), gen.uniform(6.0, 36.0)};
        const double target_a1 = base * gen.log_uniform(1e-4, 1.0);
        CostProblem at_target = p;
        at_target.metrics.laser = target_a1;
        const double budget = closed_form_optimum(at_target).breakdown.total;
        const EntryEstimate e = time_of_entry(curve, budget, p);
        EXPECT_NEAR(e.months_after_reference, curve.halving_months * std::log2(base / target_a1),
                    1e-8 * (1.0 + e.months_after_reference));
        EXPECT_GE(e.month, curve.reference);
    }
}
