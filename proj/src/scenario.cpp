#include "sailcost/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "sailcost/errors.hpp"
#include "sailcost/results.hpp"

namespace sailcost {

namespace {

// A raw `key = value` entry with its source location.
struct Entry {
    std::string value;
    int line = 0;
    int column = 0;
};

using Entries = std::map<std::string, Entry, std::less<>>;

using Getter = std::optional<double> (*)(const Scenario&);
using Setter = void (*)(Scenario&, double);

// Accessors work in the storage unit, the unit the value is held and written in.
struct FieldAccess {
    FieldInfo info;
    std::string_view storage_unit;
    bool required;
    Getter get;
    Setter set;
};

TechCurve& laser_curve(Scenario& s) {
    if (!s.laser_curve) {
        s.laser_curve = TechCurve{};
    }
    return *s.laser_curve;
}

TechCurve& optics_curve(Scenario& s) {
    if (!s.optics_curve) {
        s.optics_curve = TechCurve{};
        s.optics_curve->halving_months = 0.0;
    }
    return *s.optics_curve;
}

// Text fields (scenario.name, scenario.mode, roadmap.reference) have no accessor.
const std::array kFields = {
    FieldAccess{{"scenario.name", Dimension::dimensionless, false}, "1", true, nullptr, nullptr},
    FieldAccess{{"scenario.mode", Dimension::dimensionless, false}, "1", false, nullptr, nullptr},

    FieldAccess{{"target.beta0", Dimension::dimensionless, true}, "1", false,
                [](const Scenario& s) { return s.beta; }, [](Scenario& s, double v) { s.beta = v; }},
    FieldAccess{{"target.budget", Dimension::cost, true}, "USD", false,
                [](const Scenario& s) { return s.budget; }, [](Scenario& s, double v) { s.budget = v; }},

    FieldAccess{{"payload.m0", Dimension::mass, true}, "kg", true,
                [](const Scenario& s) { return std::optional{s.payload.mass}; },
                [](Scenario& s, double v) { s.payload.mass = v; }},

    FieldAccess{{"sail.h", Dimension::length, true}, "m", false,
                [](const Scenario& s) {
                    return s.sail.thickness > 0.0 ? std::optional{s.sail.thickness} : std::nullopt;
                },
                [](Scenario& s, double v) { s.sail.thickness = v; }},
    FieldAccess{{"sail.rho", Dimension::density, true}, "kg/m3", true,
                [](const Scenario& s) { return std::optional{s.sail.density}; },
                [](Scenario& s, double v) { s.sail.density = v; }},
    FieldAccess{{"sail.eps_r", Dimension::dimensionless, true}, "1", false,
                [](const Scenario& s) { return std::optional{s.sail.reflectivity}; },
                [](Scenario& s, double v) { s.sail.reflectivity = v; }},
    FieldAccess{{"sail.alpha", Dimension::dimensionless, true}, "1", false,
                [](const Scenario& s) { return std::optional{s.sail.absorptivity}; },
                [](Scenario& s, double v) { s.sail.absorptivity = v; }},
    FieldAccess{{"sail.xi", Dimension::dimensionless, true}, "1", false,
                [](const Scenario& s) { return std::optional{s.sail.shape_factor}; },
                [](Scenario& s, double v) { s.sail.shape_factor = v; }},
    FieldAccess{{"sail.D", Dimension::length, true}, "m", false,
                [](const Scenario& s) { return s.sail.diameter; },
                [](Scenario& s, double v) { s.sail.diameter = v; }},
    FieldAccess{{"sail.S_y", Dimension::stress, true}, "Pa", false,
                [](const Scenario& s) { return s.sail.yield_strength; },
                [](Scenario& s, double v) { s.sail.yield_strength = v; }},
    FieldAccess{{"sail.s", Dimension::dimensionless, true}, "1", false,
                [](const Scenario& s) { return std::optional{s.sail.stress_factor}; },
                [](Scenario& s, double v) { s.sail.stress_factor = v; }},

    FieldAccess{{"array.lambda", Dimension::length, true}, "m", true,
                [](const Scenario& s) { return std::optional{s.optics.wavelength}; },
                [](Scenario& s, double v) { s.optics.wavelength = v; }},
    FieldAccess{{"array.alpha_d", Dimension::dimensionless, true}, "1", false,
                [](const Scenario& s) { return std::optional{s.optics.diffraction_factor}; },
                [](Scenario& s, double v) { s.optics.diffraction_factor = v; }},
    FieldAccess{{"array.xi_arr", Dimension::dimensionless, true}, "1", false,
                [](const Scenario& s) { return std::optional{s.optics.shape_factor}; },
                [](Scenario& s, double v) { s.optics.shape_factor = v; }},
    FieldAccess{{"array.eps_b", Dimension::dimensionless, true}, "1", false,
                [](const Scenario& s) { return std::optional{s.optics.main_beam_fraction}; },
                [](Scenario& s, double v) { s.optics.main_beam_fraction = v; }},
    FieldAccess{{"array.d", Dimension::length, true}, "m", false,
                [](const Scenario& s) { return s.aperture; },
                [](Scenario& s, double v) { s.aperture = v; }},
    FieldAccess{{"array.P0", Dimension::power, true}, "W", false,
                [](const Scenario& s) { return s.power; }, [](Scenario& s, double v) { s.power = v; }},

    FieldAccess{{"metrics.a1", Dimension::cost_per_power, true}, "USD/W", false,
                [](const Scenario& s) { return std::optional{s.metrics.laser}; },
                [](Scenario& s, double v) { s.metrics.laser = v; }},
    FieldAccess{{"metrics.a2", Dimension::cost_per_area, true}, "USD/m2", false,
                [](const Scenario& s) { return std::optional{s.metrics.optics}; },
                [](Scenario& s, double v) { s.metrics.optics = v; }},
    FieldAccess{{"metrics.a3", Dimension::cost_per_energy, true}, "USD/J", false,
                [](const Scenario& s) { return std::optional{s.metrics.energy}; },
                [](Scenario& s, double v) { s.metrics.energy = v; }},
    FieldAccess{{"metrics.a4", Dimension::cost_per_energy, true}, "USD/J", false,
                [](const Scenario& s) { return std::optional{s.metrics.storage}; },
                [](Scenario& s, double v) { s.metrics.storage = v; }},
    FieldAccess{{"metrics.eps_storage", Dimension::dimensionless, true}, "1", false,
                [](const Scenario& s) { return std::optional{s.metrics.storage_efficiency}; },
                [](Scenario& s, double v) { s.metrics.storage_efficiency = v; }},
    FieldAccess{{"metrics.N_shot", Dimension::dimensionless, true}, "1", false,
                [](const Scenario& s) { return std::optional{s.metrics.shots}; },
                [](Scenario& s, double v) { s.metrics.shots = v; }},
    FieldAccess{{"metrics.personnel", Dimension::cost, true}, "USD", false,
                [](const Scenario& s) { return std::optional{s.metrics.personnel}; },
                [](Scenario& s, double v) { s.metrics.personnel = v; }},
    FieldAccess{{"metrics.land", Dimension::cost, true}, "USD", false,
                [](const Scenario& s) { return std::optional{s.metrics.land}; },
                [](Scenario& s, double v) { s.metrics.land = v; }},
    FieldAccess{{"metrics.launch", Dimension::cost, true}, "USD", false,
                [](const Scenario& s) { return std::optional{s.metrics.launch}; },
                [](Scenario& s, double v) { s.metrics.launch = v; }},
    FieldAccess{{"metrics.payload", Dimension::cost, true}, "USD", false,
                [](const Scenario& s) { return std::optional{s.metrics.payload}; },
                [](Scenario& s, double v) { s.metrics.payload = v; }},

    FieldAccess{{"roadmap.reference", Dimension::dimensionless, false}, "1", false, nullptr, nullptr},
    FieldAccess{{"roadmap.a1_base", Dimension::cost_per_power, true}, "USD/W", false,
                [](const Scenario& s) {
                    return s.laser_curve ? std::optional{s.laser_curve->base_value} : std::nullopt;
                },
                [](Scenario& s, double v) { laser_curve(s).base_value = v; }},
    FieldAccess{{"roadmap.a1_halving", Dimension::time, true}, "months", false,
                [](const Scenario& s) {
                    return s.laser_curve ? std::optional{s.laser_curve->halving_months} : std::nullopt;
                },
                [](Scenario& s, double v) { laser_curve(s).halving_months = v; }},
    FieldAccess{{"roadmap.a2_base", Dimension::cost_per_area, true}, "USD/m2", false,
                [](const Scenario& s) {
                    return s.optics_curve ? std::optional{s.optics_curve->base_value} : std::nullopt;
                },
                [](Scenario& s, double v) { optics_curve(s).base_value = v; }},
    FieldAccess{{"roadmap.a2_halving", Dimension::time, true}, "months", false,
                [](const Scenario& s) {
                    return s.optics_curve ? std::optional{s.optics_curve->halving_months} : std::nullopt;
                },
                [](Scenario& s, double v) { optics_curve(s).halving_months = v; }},
};

constexpr std::array<FieldInfo, kFields.size()> make_infos() {
    std::array<FieldInfo, kFields.size()> infos{};
    for (std::size_t i = 0; i < kFields.size(); ++i) {
        infos[i] = kFields[i].info;
    }
    return infos;
}

constexpr auto kInfos = make_infos();

const FieldAccess* find_field(std::string_view path) {
    for (const auto& field : kFields) {
        if (field.info.path == path) {
            return &field;
        }
    }
    return nullptr;
}

const FieldAccess& access_for(const FieldInfo& info) {
    const FieldAccess* field = find_field(info.path);
    if (field == nullptr) {
        throw ValidationError(std::string(info.path), "unknown field '" + std::string(info.path) + "'");
    }
    return *field;
}

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

bool is_key_char(char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_';
}

bool valid_identifier(std::string_view text) {
    return !text.empty() && std::all_of(text.begin(), text.end(), is_key_char);
}

Entries tokenize(std::string_view text, std::string_view origin) {
    Entries entries;
    std::string section;
    int line_number = 0;
    std::size_t pos = 0;
    const auto where = [&](int column) {
        return std::string(origin) + ":" + std::to_string(line_number) + ":" + std::to_string(column) + ": ";
    };
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        std::string_view raw = text.substr(pos, end - pos);
        ++line_number;
        pos = end + 1;

        const auto hash = raw.find('#');
        const std::string_view content = raw.substr(0, hash);
        const std::string_view body = trim(content);
        if (body.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        const int indent = static_cast<int>(content.find_first_not_of(" \t")) + 1;
        if (body.front() == '[') {
            if (body.back() != ']') {
                throw ParseError(where(indent) + "section header must end with ']'", line_number, indent);
            }
            const std::string_view name = trim(body.substr(1, body.size() - 2));
            if (!valid_identifier(name)) {
                throw ParseError(where(indent + 1) + "invalid section name '" + std::string(name) + "'",
                                 line_number, indent + 1);
            }
            section = std::string(name);
            bool known = false;
            for (const auto& field : kFields) {
                const auto dot = field.info.path.find('.');
                known = known || field.info.path.substr(0, dot) == section;
            }
            if (!known) {
                throw ValidationError(section, where(indent + 1) + "unknown section [" + section + "]");
            }
        } else {
            const auto eq = body.find('=');
            if (eq == std::string_view::npos) {
                throw ParseError(where(indent) + "expected 'key = value'", line_number, indent);
            }
            const std::string_view key = trim(body.substr(0, eq));
            if (!valid_identifier(key)) {
                throw ParseError(where(indent) + "invalid key '" + std::string(key) + "'", line_number, indent);
            }
            if (section.empty()) {
                throw ParseError(where(indent) + "key '" + std::string(key) + "' appears before any [section]",
                                 line_number, indent);
            }
            const std::string path = section + "." + std::string(key);
            if (find_field(path) == nullptr) {
                throw ValidationError(path, where(indent) + "unknown key '" + path + "'");
            }
            const std::string_view value = trim(body.substr(eq + 1));
            const int value_column =
                indent + static_cast<int>(eq) + 1 +
                static_cast<int>(body.substr(eq + 1).find_first_not_of(" \t"));
            if (value.empty()) {
                throw ParseError(where(value_column) + "missing value for '" + path + "'", line_number,
                                 value_column);
            }
            if (entries.contains(path)) {
                throw ParseError(where(indent) + "duplicate key '" + path + "'", line_number, indent);
            }
            entries.emplace(path, Entry{std::string(value), line_number, value_column});
        }
        if (end == text.size()) {
            break;
        }
    }
    return entries;
}

// Splits "<number>[ ]<unit>" and converts into the field's storage unit.
double parse_stored(std::string_view text, const FieldAccess& field, const std::string& where, int line,
                    int column) {
    const std::string path(field.info.path);
    text = trim(text);
    double number = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), number);
    if (ec != std::errc{} || ptr == text.data()) {
        throw ParseError(where + "'" + std::string(text) + "' is not a number (field " + path + ")", line, column);
    }
    if (!std::isfinite(number)) {
        throw ValidationError(path, where + path + " must be finite");
    }
    const std::string_view unit = trim(text.substr(static_cast<std::size_t>(ptr - text.data())));

    if (field.info.dimension == Dimension::dimensionless) {
        if (!unit.empty()) {
            throw UnitError(path, where + path + " is dimensionless and takes no unit, got '" +
                                      std::string(unit) + "'");
        }
        return number;
    }
    if (unit.empty()) {
        throw UnitError(path, where + path + " needs a unit of " + std::string(to_string(field.info.dimension)) +
                                  " (e.g. '" + std::string(field.storage_unit) + "')");
    }
    const UnitInfo* info = nullptr;
    try {
        info = &lookup_unit(unit);
    } catch (const ConfigError&) {
        throw UnitError(path, where + "unknown unit '" + std::string(unit) + "' for " + path);
    }
    if (info->dimension != field.info.dimension) {
        throw UnitError(path, where + "unit '" + std::string(unit) + "' is a " +
                                  std::string(to_string(info->dimension)) + " but " + path + " is a " +
                                  std::string(to_string(field.info.dimension)));
    }
    if (info->tag == field.storage_unit) {
        return number;
    }
    return from_si(to_si(number, unit), field.storage_unit);
}

double stored_to_si(double stored, const FieldAccess& field) {
    return field.storage_unit == "1" ? stored : to_si(stored, field.storage_unit);
}

Mode parse_mode(std::string_view text, const std::string& where) {
    if (text == "optimized") {
        return Mode::optimized;
    }
    if (text == "non-optimized") {
        return Mode::non_optimized;
    }
    if (text == "strength-limited") {
        return Mode::strength_limited;
    }
    throw ValidationError("scenario.mode", where + "scenario.mode must be one of optimized, non-optimized, "
                                                   "strength-limited; got '" + std::string(text) + "'");
}

Scenario build(const Entries& entries, std::string_view origin) {
    Scenario scenario;
    for (const auto& field : kFields) {
        const auto it = entries.find(field.info.path);
        if (it == entries.end()) {
            if (field.required) {
                throw ValidationError(std::string(field.info.path),
                                      std::string(origin) + ": missing required field " +
                                          std::string(field.info.path));
            }
            continue;
        }
        const Entry& entry = it->second;
        const std::string where = std::string(origin) + ":" + std::to_string(entry.line) + ":" +
                                  std::to_string(entry.column) + ": ";
        if (field.info.path == "scenario.name") {
            scenario.name = entry.value;
        } else if (field.info.path == "scenario.mode") {
            scenario.mode = parse_mode(entry.value, where);
        } else if (field.info.path == "roadmap.reference") {
            Month reference;
            try {
                reference = Month::parse(entry.value);
            } catch (const ConfigError& e) {
                throw ParseError(where + e.what(), entry.line, entry.column);
            }
            laser_curve(scenario).reference = reference;
        } else {
            field.set(scenario, parse_stored(entry.value, field, where, entry.line, entry.column));
        }
    }
    if (scenario.optics_curve && scenario.laser_curve) {
        scenario.optics_curve->reference = scenario.laser_curve->reference;
    }
    if (scenario.laser_curve && !entries.contains("roadmap.a1_base")) {
        throw ValidationError("roadmap.a1_base", std::string(origin) + ": [roadmap] needs a1_base");
    }
    if (scenario.optics_curve && !entries.contains("roadmap.a2_halving")) {
        throw ValidationError("roadmap.a2_halving",
                              std::string(origin) + ": roadmap.a2_base needs roadmap.a2_halving");
    }
    if (scenario.optics_curve && !scenario.laser_curve) {
        throw ValidationError("roadmap.a1_base", std::string(origin) + ": an a2 curve needs the a1 curve");
    }
    if (scenario.laser_curve && !entries.contains("roadmap.reference")) {
        throw ValidationError("roadmap.reference", std::string(origin) + ": [roadmap] needs reference = YYYY-MM");
    }
    try {
        scenario.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(e.field(), std::string(origin) + ": " + e.what());
    }
    return scenario;
}

// Canonical entries of a scenario: what `serialize_scenario` writes.
std::vector<std::pair<std::string, std::string>> canonical_entries(const Scenario& scenario) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& field : kFields) {
        const std::string path(field.info.path);
        if (path == "scenario.name") {
            out.emplace_back(path, scenario.name);
        } else if (path == "scenario.mode") {
            out.emplace_back(path, std::string(to_string(scenario.mode)));
        } else if (path == "roadmap.reference") {
            if (scenario.laser_curve) {
                out.emplace_back(path, scenario.laser_curve->reference.to_string());
            }
        } else if (const auto value = field.get(scenario)) {
            std::string text = format_number(*value);
            if (field.storage_unit != "1") {
                text += " ";
                text += field.storage_unit;
            }
            out.emplace_back(path, std::move(text));
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::optimized: return "optimized";
        case Mode::non_optimized: return "non-optimized";
        case Mode::strength_limited: return "strength-limited";
    }
    return "optimized";
}

std::span<const FieldInfo> scenario_fields() { return kInfos; }

const FieldInfo& lookup_field(std::string_view path) {
    for (const auto& info : kInfos) {
        if (info.path == path) {
            return info;
        }
    }
    throw ValidationError(std::string(path), "unknown field '" + std::string(path) + "'");
}

void Scenario::validate() const {
    if (name.empty() || name.find_first_of(" \t\"#,") != std::string::npos) {
        throw ValidationError("scenario.name",
                              "scenario.name must be non-empty without spaces, quotes, commas or '#'");
    }
    if (beta.has_value() == budget.has_value()) {
        throw ValidationError("target", "exactly one target: set either target.beta0 or target.budget");
    }
    if (beta && (!(*beta > 0.0) || *beta >= 1.0)) {
        throw ValidationError("target.beta0", "target.beta0 must lie in (0, 1)");
    }
    if (budget && !(*budget > 0.0)) {
        throw ValidationError("target.budget", "target.budget must be > 0 USD");
    }
    payload.validate();
    sail.validate(mode != Mode::strength_limited);
    optics.validate();
    metrics.validate();
    switch (mode) {
        case Mode::optimized:
            if (sail.diameter) {
                throw ValidationError("sail.D", "sail.D is derived in optimized mode and must be absent");
            }
            break;
        case Mode::non_optimized:
            if (!sail.diameter) {
                throw ValidationError("sail.D", "non-optimized mode needs sail.D");
            }
            break;
        case Mode::strength_limited:
            if (!sail.yield_strength) {
                throw ValidationError("sail.S_y", "strength-limited mode needs sail.S_y");
            }
            if (sail.diameter || sail.thickness != 0.0) {
                throw ValidationError(sail.diameter ? "sail.D" : "sail.h",
                                      "strength-limited mode derives sail.D and sail.h; leave them out");
            }
            break;
    }
    if (aperture && !(*aperture > 0.0)) {
        throw ValidationError("array.d", "array.d must be > 0");
    }
    if (power && !(*power >= 0.0)) {
        throw ValidationError("array.P0", "array.P0 must be >= 0");
    }
    if (laser_curve) {
        laser_curve->validate();
    }
    if (optics_curve) {
        try {
            optics_curve->validate();
        } catch (const ValidationError& e) {
            throw ValidationError("roadmap.a2", e.what());
        }
    }
}

CostProblem Scenario::cost_problem() const {
    if (!beta) {
        throw ValidationError("target.beta0", "this operation needs target.beta0");
    }
    if (mode != Mode::optimized) {
        throw ValidationError("scenario.mode", "cost optimization needs mode = optimized");
    }
    return CostProblem{*beta, payload, sail, optics, metrics};
}

SpeedProblem Scenario::speed_problem() const {
    if (!budget) {
        throw ValidationError("target.budget", "this operation needs target.budget");
    }
    if (mode != Mode::optimized) {
        throw ValidationError("scenario.mode", "speed maximization needs mode = optimized");
    }
    return SpeedProblem{*budget, payload, sail, optics, metrics};
}

ArraySpec Scenario::array() const {
    if (!aperture) {
        throw ValidationError("array.d", "this operation needs array.d");
    }
    return ArraySpec{optics, *aperture, power.value_or(0.0)};
}

Scenario parse_scenario(std::string_view text, std::string_view origin) {
    return build(tokenize(text, origin), origin);
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open scenario file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), path.string());
}

std::string serialize_scenario(const Scenario& scenario) {
    std::string out;
    std::string section;
    for (const auto& [path, value] : canonical_entries(scenario)) {
        const auto dot = path.find('.');
        const std::string current = path.substr(0, dot);
        if (current != section) {
            if (!section.empty()) {
                out += '\n';
            }
            out += "[" + current + "]\n";
            section = current;
        }
        out += path.substr(dot + 1) + " = " + value + "\n";
    }
    return out;
}

Scenario apply_overrides(Scenario scenario, std::span<const std::string> overrides) {
    if (overrides.empty()) {
        return scenario;
    }
    Entries entries;
    int line = 0;
    for (auto& [path, value] : canonical_entries(scenario)) {
        entries.emplace(path, Entry{value, ++line, 1});
    }
    for (const auto& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ParseError("override '" + item + "' is not of the form field=value", 0, 1);
        }
        const std::string path(trim(std::string_view(item).substr(0, eq)));
        const std::string value(trim(std::string_view(item).substr(eq + 1)));
        if (find_field(path) == nullptr) {
            throw ValidationError(path, "override names unknown field '" + path + "'");
        }
        if (value.empty() || value == "none") {
            entries.erase(path);
        } else {
            entries[path] = Entry{value, 0, static_cast<int>(eq) + 2};
        }
    }
    return build(entries, "override");
}

double parse_quantity(std::string_view text, const FieldInfo& field) {
    const FieldAccess& access = access_for(field);
    if (!field.numeric) {
        throw ValidationError(std::string(field.path), std::string(field.path) + " is not numeric");
    }
    return stored_to_si(parse_stored(text, access, "", 0, 1), access);
}

std::optional<double> get_numeric(const Scenario& scenario, std::string_view path) {
    const FieldAccess* field = find_field(path);
    if (field == nullptr || field->get == nullptr) {
        throw ValidationError(std::string(path), "'" + std::string(path) + "' is not a numeric field");
    }
    const auto stored = field->get(scenario);
    if (!stored) {
        return std::nullopt;
    }
    return stored_to_si(*stored, *field);
}

void set_numeric(Scenario& scenario, std::string_view path, double value_si) {
    const FieldAccess* field = find_field(path);
    if (field == nullptr || field->set == nullptr) {
        throw ValidationError(std::string(path), "'" + std::string(path) + "' is not a numeric field");
    }
    field->set(scenario, field->storage_unit == "1" ? value_si : from_si(value_si, field->storage_unit));
}

void SweepSpec::validate() const {
    const FieldInfo& field = lookup_field(axis);
    if (!field.numeric) {
        throw ValidationError("sweep.axis", "sweep axis '" + axis + "' is not numeric");
    }
    if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) {
        throw ValidationError("sweep.from", "sweep needs finite from < to");
    }
    if (scale == SweepScale::log && !(from > 0.0)) {
        throw ValidationError("sweep.from", "log-scale sweep needs from > 0");
    }
    if (points < 2) {
        throw ValidationError("sweep.points", "sweep needs at least 2 points");
    }
}

std::vector<double> SweepSpec::values() const {
    validate();
    std::vector<double> out(static_cast<std::size_t>(points));
    const double span = points - 1;
    for (int i = 0; i < points; ++i) {
        const double t = i / span;
        out[i] = scale == SweepScale::log ? from * std::pow(to / from, t) : from + (to - from) * t;
    }
    out.front() = from;
    out.back() = to;
    return out;
}

}  // namespace sailcost
