#include "sailcost/roadmap.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sailcost/errors.hpp"

namespace sailcost {

namespace {

// Crossing times within this many months of a whole month count as that month.
constexpr double kMonthSlack = 1e-9;

std::string describe(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

double energy_floor(const CostProblem& problem) {
    const double photon_energy =
        2.0 * problem.beta * problem.payload.mass * speed_of_light * speed_of_light / eta(problem.sail);
    return problem.metrics.energy_rate() * photon_energy;
}

}  // namespace

Month Month::from_year_month(int year, int month) {
    if (month < 1 || month > 12) {
        throw ConfigError("month must lie in 1..12, got " + std::to_string(month));
    }
    return Month{12 * year + month - 1};
}

Month Month::parse(std::string_view text) {
    const auto dash = text.find('-', 1);
    if (dash == std::string_view::npos) {
        throw ConfigError("date '" + std::string(text) + "' is not of the form YYYY-MM");
    }
    int year = 0;
    int month = 0;
    const auto year_part = text.substr(0, dash);
    const auto month_part = text.substr(dash + 1);
    const auto y = std::from_chars(year_part.data(), year_part.data() + year_part.size(), year);
    const auto m = std::from_chars(month_part.data(), month_part.data() + month_part.size(), month);
    if (y.ec != std::errc{} || y.ptr != year_part.data() + year_part.size() || m.ec != std::errc{} ||
        m.ptr != month_part.data() + month_part.size() || month_part.size() != 2) {
        throw ConfigError("date '" + std::string(text) + "' is not of the form YYYY-MM");
    }
    return from_year_month(year, month);
}

int Month::year() const { return floor_div(index, 12); }

int Month::month() const { return index - 12 * year() + 1; }

std::string Month::to_string() const {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%04d-%02d", year(), month());
    return buffer;
}

void TechCurve::validate() const {
    if (!std::isfinite(base_value) || base_value <= 0.0) {
        throw ValidationError("roadmap.base", "cost curve base value must be > 0, got " + describe(base_value));
    }
    if (!std::isfinite(halving_months) || halving_months <= 0.0) {
        throw ValidationError("roadmap.halving",
                              "cost curve halving time must be > 0 months, got " + describe(halving_months));
    }
}

double starlight_designation(double beta) {
    if (!(beta > 0.0) || beta >= 1.0) {
        throw DomainError("Starlight designation needs 0 < beta0 < 1, got " + describe(beta));
    }
    return 100.0 * beta;
}

double stage_cost_ratio(double x_hi, double x_lo) {
    if (!(x_lo > 0.0) || x_hi < x_lo) {
        throw DomainError("stage cost ratio needs x_hi >= x_lo > 0");
    }
    return std::pow(x_hi / x_lo, 4.0 / 3.0);
}

double project_metric_at(const TechCurve& curve, double months_after_reference) {
    curve.validate();
    return curve.base_value * std::exp2(-months_after_reference / curve.halving_months);
}

double project_metric(const TechCurve& curve, Month date) {
    return project_metric_at(curve, static_cast<double>(date.index - curve.reference.index));
}

bool beyond_backward_horizon(const TechCurve& curve, Month date) {
    return static_cast<double>(curve.reference.index - date.index) >
           max_backward_halvings * curve.halving_months;
}

EntryEstimate time_of_entry(const TechCurve& laser_curve, double budget, const CostProblem& problem,
                            const std::optional<TechCurve>& optics_curve) {
    laser_curve.validate();
    if (optics_curve) {
        optics_curve->validate();
    }
    CostProblem checked = problem;
    checked.metrics.laser = laser_curve.base_value;
    checked.validate();
    if (!(checked.metrics.optics > 0.0)) {
        throw DegenerateOptimumError("time of entry needs a2 > 0");
    }

    const double floor = energy_floor(checked);
    if (!(budget > floor)) {
        throw InfeasibleError("budget " + describe(budget) + " USD never suffices: energy costs alone reach " +
                                  describe(floor) + " USD as a1 -> 0",
                              floor);
    }
    const double system_budget = budget - floor;
    const auto a2_at = [&](double t) {
        return optics_curve ? project_metric_at(*optics_curve, t) : checked.metrics.optics;
    };
    const auto required_a1 = [&](double t) {
        return a1_for_budget(system_budget, checked.beta, a2_at(t), checked.optics, checked.sail,
                             checked.payload);
    };

    double crossing = 0.0;
    if (!optics_curve) {
        crossing = laser_curve.halving_months * std::log2(laser_curve.base_value / required_a1(0.0));
    } else {
        const auto gap = [&](double t) { return project_metric_at(laser_curve, t) - required_a1(t); };
        if (gap(0.0) > 0.0) {
            double lo = 0.0;
            double hi = laser_curve.halving_months;
            while (gap(hi) > 0.0) {
                lo = hi;
                hi *= 2.0;
            }
            for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
                const double mid = 0.5 * (lo + hi);
                (gap(mid) > 0.0 ? lo : hi) = mid;
            }
            crossing = hi;
        }
    }

    EntryEstimate entry;
    entry.months_after_reference = crossing > kMonthSlack ? crossing : 0.0;
    entry.month = Month{laser_curve.reference.index +
                        static_cast<int>(std::ceil(entry.months_after_reference - kMonthSlack))};
    entry.required_laser_cost = project_metric_at(laser_curve, entry.months_after_reference);
    entry.projected_optics_cost = a2_at(entry.months_after_reference);
    return entry;
}

StagePlan plan_stages(std::span<const double> designations, const CostProblem& base,
                      const TechCurve& laser_curve, const std::optional<TechCurve>& optics_curve,
                      std::optional<double> budget) {
    StagePlan plan;
    double previous = 0.0;
    for (const double x : designations) {
        if (!(x > previous)) {
            throw ValidationError("stages", "stage designations must be positive and strictly increasing");
        }
        previous = x;

        Stage stage;
        stage.designation = x;
        stage.beta = x / 100.0;
        CostProblem problem = base;
        problem.beta = stage.beta;
        problem.metrics.laser = laser_curve.base_value;
        stage.entry = laser_curve.reference;
        if (budget) {
            const EntryEstimate entry = time_of_entry(laser_curve, *budget, problem, optics_curve);
            stage.entry = entry.month;
            stage.months_after_reference = entry.months_after_reference;
            problem.metrics.laser = entry.required_laser_cost;
            problem.metrics.optics = entry.projected_optics_cost;
        }
        stage.metrics = problem.metrics;
        stage.design = closed_form_optimum(problem);
        plan.stages.push_back(std::move(stage));
    }
    return plan;
}

}  // namespace sailcost
