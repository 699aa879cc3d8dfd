#pragma once

// Scenario files: a sectioned key-value text format with an explicit unit on
// every dimensioned quantity.
//
//   # worked example
//   [scenario]
//   name = example1
//   mode = optimized            # optimized | non-optimized | strength-limited
//
//   [target]                    # exactly one of beta0 / budget
//   beta0 = 0.2
//
//   [payload]
//   m0 = 1 g
//
//   [sail]
//   h = 1 um
//   rho = 1 g/cc
//
// docs/scenario-format.md lists every section, key, default and unit.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sailcost/cost_model.hpp"
#include "sailcost/optimizer.hpp"
#include "sailcost/quantities.hpp"
#include "sailcost/roadmap.hpp"

namespace sailcost {

enum class Mode { optimized, non_optimized, strength_limited };

[[nodiscard]] std::string_view to_string(Mode mode);

struct Scenario {
    std::string name;
    Mode mode = Mode::optimized;
    Payload payload;
    SailSpec sail;
    ArrayOptics optics;
    std::optional<double> aperture;  // array.d, m
    std::optional<double> power;     // array.P0, W
    CostMetrics metrics;
    std::optional<double> beta;      // target.beta0
    std::optional<double> budget;    // target.budget, USD
    std::optional<TechCurve> laser_curve;
    std::optional<TechCurve> optics_curve;

    /// Enforces every type invariant plus the cross-field rules (one target,
    /// mode-specific sail fields, complete roadmap blocks).
    void validate() const;

    /// Cost problem for the beta0 target. Requires `beta`.
    [[nodiscard]] CostProblem cost_problem() const;
    /// Speed problem for the budget target. Requires `budget`.
    [[nodiscard]] SpeedProblem speed_problem() const;
    /// Array with the scenario's d and P0. Requires `aperture`; P0 defaults to 0.
    [[nodiscard]] ArraySpec array() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// One addressable scenario field (`section.key`).
struct FieldInfo {
    std::string_view path;
    Dimension dimension;
    bool numeric;
};

/// Every key a scenario file may contain, in serialization order.
[[nodiscard]] std::span<const FieldInfo> scenario_fields();

[[nodiscard]] const FieldInfo& lookup_field(std::string_view path);

/// Parses scenario text. `origin` names the source in error messages.
[[nodiscard]] Scenario parse_scenario(std::string_view text, std::string_view origin = "<string>");

/// Reads and parses a scenario file.
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);

/// Canonical text form: fixed key order, SI units, shortest round-trip numbers.
[[nodiscard]] std::string serialize_scenario(const Scenario& scenario);

/// Applies `path=value` overrides (same value syntax as the file) and re-validates.
[[nodiscard]] Scenario apply_overrides(Scenario scenario, std::span<const std::string> overrides);

/// Parses "<number>[ ]<unit>" for a field, returning the SI value.
[[nodiscard]] double parse_quantity(std::string_view text, const FieldInfo& field);

/// Reads a numeric field in SI units; nullopt for an absent optional field.
[[nodiscard]] std::optional<double> get_numeric(const Scenario& scenario, std::string_view path);

/// Sets a numeric field from an SI value (no validation).
void set_numeric(Scenario& scenario, std::string_view path, double value_si);

enum class SweepScale { linear, log };

struct SweepSpec {
    std::string axis;                 // field path, e.g. "array.d"
    SweepScale scale = SweepScale::linear;
    double from = 0.0;                // SI
    double to = 0.0;                  // SI
    int points = 2;

    void validate() const;

    /// Axis values in order; first and last equal `from` and `to` exactly.
    [[nodiscard]] std::vector<double> values() const;
};

}  // namespace sailcost
