#pragma once

// Staged development: Starlight-x designations, stage-to-stage cost ratios and
// exponential cost curves for the laser metric a1 (optionally a2).
//
// Dates are whole months counted from year 0 (month index = 12 * year + month - 1).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sailcost/cost_model.hpp"

namespace sailcost {

struct Month {
    int index = 0;

    [[nodiscard]] static Month from_year_month(int year, int month);
    /// Parses "YYYY-MM". Throws ConfigError on malformed input.
    [[nodiscard]] static Month parse(std::string_view text);

    [[nodiscard]] int year() const;
    [[nodiscard]] int month() const;  // 1..12
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Month&, const Month&) = default;
};

/// Exponentially falling unit cost: value(t) = base * 2^(-(t - reference) / halving).
struct TechCurve {
    double base_value = 0.0;     // unit cost at `reference`
    Month reference;
    double halving_months = 18.0;

    void validate() const;

    friend bool operator==(const TechCurve&, const TechCurve&) = default;
};

/// Backward extrapolation beyond this many halving times is flagged.
inline constexpr double max_backward_halvings = 10.0;

/// Percent of light speed: Starlight-x with x = 100 beta0.
[[nodiscard]] double starlight_designation(double beta);

/// Minimum-cost ratio between two stages at fixed a1, a2: (x_hi / x_lo)^(4/3).
[[nodiscard]] double stage_cost_ratio(double x_hi, double x_lo);

[[nodiscard]] double project_metric(const TechCurve& curve, Month date);

/// Same, at a fractional offset in months from the reference date.
[[nodiscard]] double project_metric_at(const TechCurve& curve, double months_after_reference);

/// True when `date` lies more than `max_backward_halvings` halving times before the reference.
[[nodiscard]] bool beyond_backward_horizon(const TechCurve& curve, Month date);

struct EntryEstimate {
    Month month;                    // first whole month at which the budget suffices
    double months_after_reference;  // fractional crossing time, >= 0
    double required_laser_cost;     // a1 at the crossing, USD/W
    double projected_optics_cost;   // a2 at the crossing, USD/m^2
};

/// Earliest date at which the projected a1 brings the minimum system cost for
/// `problem.beta` within `budget`. `problem.metrics.laser` is ignored; a2 is held
/// at `problem.metrics.optics` unless `optics_curve` is given. Energy terms are
/// part of the budget. Never returns a month before the curve's reference.
/// Throws InfeasibleError when the budget does not exceed the energy cost floor.
[[nodiscard]] EntryEstimate time_of_entry(const TechCurve& laser_curve, double budget,
                                          const CostProblem& problem,
                                          const std::optional<TechCurve>& optics_curve = std::nullopt);

struct Stage {
    double designation = 0.0;  // x, percent of c
    double beta = 0.0;         // x / 100
    CostMetrics metrics;       // at entry
    Month entry;
    double months_after_reference = 0.0;
    OptimumDesign design;
};

struct StagePlan {
    std::vector<Stage> stages;
};

/// Builds the Starlight ladder for increasing designations. Without a budget every
/// stage is costed with the reference-date metrics; with a budget each stage enters
/// at its `time_of_entry` and is costed with the metrics projected to that month.
[[nodiscard]] StagePlan plan_stages(std::span<const double> designations, const CostProblem& base,
                                    const TechCurve& laser_curve,
                                    const std::optional<TechCurve>& optics_curve,
                                    std::optional<double> budget);

}  // namespace sailcost
