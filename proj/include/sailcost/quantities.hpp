#pragma once

// Canonical internal units (everything the library computes with):
//
//   length  m        mass     kg       power   W        speed  m/s
//   time    s        energy   J        flux    W/m^2    density kg/m^3
//   stress  Pa       cost     USD      a1 USD/W  a2 USD/m^2  a3, a4 USD/J
//
// Scenario files and the CLI accept the tags listed in `unit_table()`; each
// tag maps to its canonical unit through an exact rational factor num/den.

#include <numbers>
#include <span>
#include <string>
#include <string_view>

namespace sailcost {

/// Speed of light in vacuum, m/s (exact by definition of the metre).
inline constexpr double speed_of_light = 299'792'458.0;

inline constexpr double pi = std::numbers::pi;

/// Shape factor of a circle of diameter D: area = (pi/4) D^2.
inline constexpr double circular_shape_factor = std::numbers::pi / 4.0;

/// Shape factor of a square of side d.
inline constexpr double square_shape_factor = 1.0;

/// Average Gregorian month, s.
inline constexpr double seconds_per_month = 365.2425 * 86400.0 / 12.0;

enum class Dimension {
    dimensionless,
    length,
    mass,
    time,
    power,
    energy,
    density,
    stress,
    speed,
    flux,
    cost,
    cost_per_power,
    cost_per_area,
    cost_per_energy,
};

[[nodiscard]] std::string_view to_string(Dimension dimension);

struct UnitInfo {
    std::string_view tag;
    Dimension dimension;
    // value_si = value * num / den. Both are exactly representable.
    double num;
    double den;
};

/// Every supported unit tag.
[[nodiscard]] std::span<const UnitInfo> unit_table();

/// Looks up a unit tag. Throws ConfigError for an unknown tag.
[[nodiscard]] const UnitInfo& lookup_unit(std::string_view tag);

/// The canonical tag for a dimension ("m", "kg", "USD/W", ...).
[[nodiscard]] std::string_view canonical_unit(Dimension dimension);

[[nodiscard]] double to_si(double value, std::string_view unit);
[[nodiscard]] double from_si(double value_si, std::string_view unit);

/// Literal helpers for the mixed-unit inputs used throughout tests and fixtures.
namespace units {
inline constexpr double micrometre = 1e-6;
inline constexpr double kilometre = 1e3;
inline constexpr double gram = 1e-3;
inline constexpr double gram_per_cc = 1e3;
inline constexpr double gigawatt = 1e9;
}  // namespace units

}  // namespace sailcost
