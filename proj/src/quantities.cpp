#include "sailcost/quantities.hpp"

#include <array>

#include "sailcost/errors.hpp"

namespace sailcost {

namespace {

constexpr std::array kUnits = {
    UnitInfo{"1", Dimension::dimensionless, 1.0, 1.0},

    UnitInfo{"m", Dimension::length, 1.0, 1.0},
    UnitInfo{"km", Dimension::length, 1e3, 1.0},
    UnitInfo{"cm", Dimension::length, 1.0, 1e2},
    UnitInfo{"mm", Dimension::length, 1.0, 1e3},
    UnitInfo{"um", Dimension::length, 1.0, 1e6},
    UnitInfo{"nm", Dimension::length, 1.0, 1e9},

    UnitInfo{"kg", Dimension::mass, 1.0, 1.0},
    UnitInfo{"g", Dimension::mass, 1.0, 1e3},
    UnitInfo{"mg", Dimension::mass, 1.0, 1e6},
    UnitInfo{"t", Dimension::mass, 1e3, 1.0},

    UnitInfo{"s", Dimension::time, 1.0, 1.0},
    UnitInfo{"min", Dimension::time, 60.0, 1.0},
    UnitInfo{"h", Dimension::time, 3600.0, 1.0},
    UnitInfo{"day", Dimension::time, 86400.0, 1.0},
    UnitInfo{"month", Dimension::time, seconds_per_month, 1.0},
    UnitInfo{"months", Dimension::time, seconds_per_month, 1.0},
    UnitInfo{"yr", Dimension::time, 12.0 * seconds_per_month, 1.0},

    UnitInfo{"W", Dimension::power, 1.0, 1.0},
    UnitInfo{"kW", Dimension::power, 1e3, 1.0},
    UnitInfo{"MW", Dimension::power, 1e6, 1.0},
    UnitInfo{"GW", Dimension::power, 1e9, 1.0},
    UnitInfo{"TW", Dimension::power, 1e12, 1.0},

    UnitInfo{"J", Dimension::energy, 1.0, 1.0},
    UnitInfo{"kJ", Dimension::energy, 1e3, 1.0},
    UnitInfo{"MJ", Dimension::energy, 1e6, 1.0},
    UnitInfo{"GJ", Dimension::energy, 1e9, 1.0},
    UnitInfo{"Wh", Dimension::energy, 3600.0, 1.0},
    UnitInfo{"kWh", Dimension::energy, 3.6e6, 1.0},

    UnitInfo{"kg/m3", Dimension::density, 1.0, 1.0},
    UnitInfo{"g/cc", Dimension::density, 1e3, 1.0},
    UnitInfo{"g/cm3", Dimension::density, 1e3, 1.0},

    UnitInfo{"Pa", Dimension::stress, 1.0, 1.0},
    UnitInfo{"kPa", Dimension::stress, 1e3, 1.0},
    UnitInfo{"MPa", Dimension::stress, 1e6, 1.0},
    UnitInfo{"GPa", Dimension::stress, 1e9, 1.0},

    UnitInfo{"m/s", Dimension::speed, 1.0, 1.0},
    UnitInfo{"km/s", Dimension::speed, 1e3, 1.0},

    UnitInfo{"W/m2", Dimension::flux, 1.0, 1.0},
    UnitInfo{"kW/m2", Dimension::flux, 1e3, 1.0},

    UnitInfo{"USD", Dimension::cost, 1.0, 1.0},
    UnitInfo{"kUSD", Dimension::cost, 1e3, 1.0},
    UnitInfo{"MUSD", Dimension::cost, 1e6, 1.0},
    UnitInfo{"BUSD", Dimension::cost, 1e9, 1.0},

    UnitInfo{"USD/W", Dimension::cost_per_power, 1.0, 1.0},
    UnitInfo{"USD/kW", Dimension::cost_per_power, 1.0, 1e3},

    UnitInfo{"USD/m2", Dimension::cost_per_area, 1.0, 1.0},
    UnitInfo{"USD/km2", Dimension::cost_per_area, 1.0, 1e6},

    UnitInfo{"USD/J", Dimension::cost_per_energy, 1.0, 1.0},
    UnitInfo{"USD/Wh", Dimension::cost_per_energy, 1.0, 3600.0},
    UnitInfo{"USD/kWh", Dimension::cost_per_energy, 1.0, 3.6e6},
};

}  // namespace

std::string_view to_string(Dimension dimension) {
    switch (dimension) {
        case Dimension::dimensionless: return "dimensionless";
        case Dimension::length: return "length";
        case Dimension::mass: return "mass";
        case Dimension::time: return "time";
        case Dimension::power: return "power";
        case Dimension::energy: return "energy";
        case Dimension::density: return "density";
        case Dimension::stress: return "stress";
        case Dimension::speed: return "speed";
        case Dimension::flux: return "flux";
        case Dimension::cost: return "cost";
        case Dimension::cost_per_power: return "cost per power";
        case Dimension::cost_per_area: return "cost per area";
        case Dimension::cost_per_energy: return "cost per energy";
    }
    return "unknown";
}

std::span<const UnitInfo> unit_table() { return kUnits; }

const UnitInfo& lookup_unit(std::string_view tag) {
    for (const auto& unit : kUnits) {
        if (unit.tag == tag) {
            return unit;
        }
    }
    throw ConfigError("unknown unit tag '" + std::string(tag) + "'");
}

std::string_view canonical_unit(Dimension dimension) {
    for (const auto& unit : kUnits) {
        if (unit.dimension == dimension && unit.num == 1.0 && unit.den == 1.0) {
            return unit.tag;
        }
    }
    return "1";
}

double to_si(double value, std::string_view unit) {
    const auto& info = lookup_unit(unit);
    return value * info.num / info.den;
}

double from_si(double value_si, std::string_view unit) {
    const auto& info = lookup_unit(unit);
    return value_si * info.den / info.num;
}

}  // namespace sailcost
