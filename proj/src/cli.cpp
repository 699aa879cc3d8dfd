#include "sailcost/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <filesystem>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sailcost/energy.hpp"
#include "sailcost/errors.hpp"
#include "sailcost/optimizer.hpp"
#include "sailcost/results.hpp"
#include "sailcost/roadmap.hpp"
#include "sailcost/scenario.hpp"
#include "sailcost/validation.hpp"

namespace sailcost {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string scenario_path;
    std::string format;
    std::string output;
    std::vector<std::string> sets;
    bool metadata = false;
    bool numeric = false;

    std::string axis;
    bool log_scale = false;
    bool linear_scale = false;
    std::string from;
    std::string to;
    int points = 0;

    std::optional<double> lifetime_hours;
    std::string energy_price;
    double wall_plug = 0.5;

    std::vector<double> stages;
    std::string budget;
};

// What a subcommand produced: a nested document or a flat table.
struct Output {
    std::string scenario;
    std::string command;
    std::optional<json> document;
    std::optional<ResultTable> table;
};

json kinematics_json(const KinematicsResult& k) {
    return json{{"v0", k.speed},
                {"beta0", k.beta},
                {"t0_s", k.time},
                {"L0_m", k.distance},
                {"v_inf", k.coast_speed},
                {"accel_m_s2", k.acceleration},
                {"F_ap_W_m2", k.aperture_flux},
                {"m_total_kg", k.total_mass},
                {"D_m", k.sail_diameter},
                {"accelerating", k.accelerating},
                {"beyond_validity", k.beyond_validity}};
}

json costs_json(const CostBreakdown& c) {
    return json{{"C1", c.laser},        {"C2", c.optics},       {"C3", c.energy},
                {"C4", c.storage},      {"C_T", c.total},       {"f1", c.fractions[0]},
                {"f2", c.fractions[1]}, {"f3", c.fractions[2]}, {"f4", c.fractions[3]}};
}

json energy_json(const ShotEnergy& e) {
    return json{{"E_gamma_J", e.photon_energy},
                {"E_storage_J", e.storage_energy},
                {"KE_J", e.kinetic_energy},
                {"launch_efficiency", e.launch_efficiency}};
}

// Flattens numeric and boolean leaves into one CSV row keyed `section.key`.
void flatten(const json& node, const std::string& prefix, ResultTable& table) {
    for (const auto& [key, value] : node.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten(value, name, table);
        } else if (value.is_number()) {
            table.columns.push_back(name);
            table.rows.front().push_back(value.get<double>());
        } else if (value.is_boolean()) {
            table.columns.push_back(name);
            table.rows.front().push_back(value.get<bool>() ? 1.0 : 0.0);
        }
    }
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

std::size_t emit(const Output& output, const Options& options, Format default_format, std::ostream& out,
                 std::ostream& err) {
    const Format format = options.format.empty() ? default_format : parse_format(options.format);
    std::string text;
    if (format == Format::json) {
        json doc = output.document ? *output.document : to_json(*output.table);
        if (options.metadata) {
            if (doc.is_array()) {
                doc = json{{"rows", std::move(doc)}};
            }
            doc["metadata"] = {{"generated_at", utc_timestamp()}, {"command", output.command}};
        }
        text = doc.dump(2) + "\n";
    } else {
        ResultTable table;
        if (output.table) {
            table = *output.table;
        } else {
            table.rows.emplace_back();
            flatten(*output.document, "", table);
        }
        text = to_csv(table);
        if (options.metadata) {
            text = "# generated_at=" + utc_timestamp() + " command=" + output.command + "\n" + text;
        }
    }

    std::filesystem::path destination = options.output.empty() ? "-" : options.output;
    if (options.output.empty()) {
        if (const char* dir = std::getenv(output_dir_env); dir != nullptr && *dir != '\0') {
            destination = std::filesystem::path(dir) /
                          (output.scenario + "-" + output.command + (format == Format::csv ? ".csv" : ".json"));
        }
    }
    const std::size_t bytes = write_text(text, destination, out);
    if (destination != "-") {
        err << "wrote " << bytes << " bytes to " << destination.string() << "\n";
    }
    return bytes;
}

Scenario load(const Options& options) {
    return apply_overrides(load_scenario(options.scenario_path), options.sets);
}

json header(const Scenario& scenario) {
    return json{{"scenario", scenario.name}, {"mode", std::string(to_string(scenario.mode))}};
}

struct OperatingPoint {
    double aperture = 0.0;
    double power = 0.0;
    KinematicsResult kinematics;
    std::optional<SailGeometry> geometry;
};

OperatingPoint solve_point(const Scenario& scenario) {
    const ArraySpec array = scenario.array();
    if (!scenario.power) {
        throw ValidationError("array.P0", "this operation needs array.P0");
    }
    OperatingPoint point{array.aperture, array.power, {}, std::nullopt};
    switch (scenario.mode) {
        case Mode::optimized:
            point.kinematics = kinematics_optimized(array, scenario.sail, scenario.payload);
            break;
        case Mode::non_optimized:
            point.kinematics = kinematics_non_optimized(array, scenario.sail, scenario.payload);
            break;
        case Mode::strength_limited:
            point.geometry = strength_limited_geometry(array.power, scenario.sail, scenario.payload);
            point.kinematics = kinematics_strength_limited(array, scenario.sail, scenario.payload);
            break;
    }
    return point;
}

Output cmd_solve(const Options& options) {
    const Scenario scenario = load(options);
    const OperatingPoint point = solve_point(scenario);
    const CostBreakdown costs = cost_components(point.power, point.kinematics.time, point.aperture,
                                                scenario.metrics, scenario.optics);
    const ShotEnergy energy =
        energy_at_operating_point(point.kinematics, point.power, scenario.metrics.storage_efficiency);
    json doc = header(scenario);
    doc["array"] = {{"d_m", point.aperture}, {"P0_W", point.power}};
    if (point.geometry) {
        doc["sail"] = {{"D_m", point.geometry->diameter}, {"h_m", point.geometry->thickness}};
    }
    doc["kinematics"] = kinematics_json(point.kinematics);
    doc["costs"] = costs_json(costs);
    doc["energy"] = energy_json(energy);
    return Output{scenario.name, "solve", std::move(doc), std::nullopt};
}

Output cmd_optimize(const Options& options) {
    const Scenario scenario = load(options);
    const CostProblem problem = scenario.cost_problem();
    const OptimumDesign design = options.numeric ? minimize_cost_numeric(problem) : closed_form_optimum(problem);
    const ShotEnergy energy =
        energy_at_operating_point(design.kinematics, design.power, scenario.metrics.storage_efficiency);
    json doc = optimum_document(scenario, design, energy);
    doc["method"] = std::string(to_string(design.method));
    return Output{scenario.name, "optimize", std::move(doc), std::nullopt};
}

Output cmd_max_speed(const Options& options) {
    const Scenario scenario = load(options);
    const SpeedProblem problem = scenario.speed_problem();
    const SpeedMaxResult best = options.numeric ? maximize_speed_numeric(problem) : maximize_speed_fixed_cost(problem);
    const ShotEnergy energy =
        energy_at_operating_point(best.kinematics, best.power, scenario.metrics.storage_efficiency);
    json doc = header(scenario);
    doc["optimum"] = {{"d_m", best.aperture}, {"P0_W", best.power}, {"beta0", best.beta}};
    doc["costs"] = costs_json(best.breakdown);
    doc["kinematics"] = kinematics_json(best.kinematics);
    doc["energy"] = energy_json(energy);
    doc["method"] = std::string(to_string(best.method));
    return Output{scenario.name, "max-speed", std::move(doc), std::nullopt};
}

std::vector<double> sweep_row(const Scenario& scenario, const std::string& axis, double value, bool numeric) {
    const auto tail = [](double d, double p, const CostBreakdown& c, double xi_arr) {
        return std::vector<double>{d, p, c.laser, c.optics, c.energy, c.storage, c.total, p / (xi_arr * d * d)};
    };
    Scenario point = scenario;
    set_numeric(point, axis, value);
    point.validate();
    if (axis == "array.d") {
        const CostProblem problem = point.cost_problem();
        const double power = required_power(problem.beta, problem.optics, value, problem.sail, problem.payload);
        return tail(value, power, cost_along_constraint(value, problem), problem.optics.shape_factor);
    }
    std::vector<double> row{value};
    std::vector<double> rest;
    if (point.beta) {
        const CostProblem problem = point.cost_problem();
        const OptimumDesign design = numeric ? minimize_cost_numeric(problem) : closed_form_optimum(problem);
        rest = tail(design.aperture, design.power, design.breakdown, problem.optics.shape_factor);
    } else {
        const SpeedProblem problem = point.speed_problem();
        const SpeedMaxResult best = numeric ? maximize_speed_numeric(problem) : maximize_speed_fixed_cost(problem);
        rest = tail(best.aperture, best.power, best.breakdown, problem.optics.shape_factor);
        rest.insert(rest.begin() + 2, best.beta);
    }
    row.insert(row.end(), rest.begin(), rest.end());
    return row;
}

Output cmd_sweep(const Options& options) {
    const Scenario scenario = load(options);
    if (options.log_scale && options.linear_scale) {
        throw CLI::ValidationError("--log and --linear are mutually exclusive");
    }
    const FieldInfo& field = lookup_field(options.axis);
    if (!field.numeric) {
        throw ValidationError("sweep.axis", "sweep axis '" + options.axis + "' is not numeric");
    }
    SweepSpec spec;
    spec.axis = options.axis;
    spec.scale = options.log_scale ? SweepScale::log : SweepScale::linear;
    spec.from = parse_quantity(options.from, field);
    spec.to = parse_quantity(options.to, field);
    spec.points = options.points;
    const std::vector<double> values = spec.values();
    if (scenario.mode != Mode::optimized) {
        throw ValidationError("scenario.mode", "sweep needs mode = optimized");
    }

    ResultTable table;
    table.columns = {"d_m", "P0_W", "C1", "C2", "C3", "C4", "C_T", "F_ap"};
    if (spec.axis != "array.d") {
        if (!scenario.beta) {
            table.columns.insert(table.columns.begin() + 2, "beta0");
        }
        table.columns.insert(table.columns.begin(), spec.axis);
    }
    table.rows.resize(values.size());

    std::vector<std::exception_ptr> failures(values.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < values.size(); i = next++) {
            try {
                table.rows[i] = sweep_row(scenario, spec.axis, values[i], options.numeric);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads =
        std::min<std::size_t>(values.size(), std::max(1u, std::thread::hardware_concurrency()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return Output{scenario.name, "sweep", std::nullopt, std::move(table)};
}

Output cmd_energy(const Options& options) {
    const Scenario scenario = load(options);
    OperatingPoint point;
    if (scenario.aperture && scenario.power) {
        point = solve_point(scenario);
    } else {
        const OptimumDesign design = closed_form_optimum(scenario.cost_problem());
        point = OperatingPoint{design.aperture, design.power, design.kinematics, std::nullopt};
    }
    const ShotEnergy energy =
        energy_at_operating_point(point.kinematics, point.power, scenario.metrics.storage_efficiency);
    const CostBreakdown costs = cost_components(point.power, point.kinematics.time, point.aperture,
                                                scenario.metrics, scenario.optics);
    json doc = header(scenario);
    doc["array"] = {{"d_m", point.aperture}, {"P0_W", point.power}};
    doc["energy"] = energy_json(energy);
    doc["costs"] = {{"C3", costs.energy}, {"C4", costs.storage}};
    if (options.lifetime_hours) {
        double price = scenario.metrics.energy;
        if (!options.energy_price.empty()) {
            price = parse_quantity(options.energy_price, lookup_field("metrics.a3"));
        }
        const double optical_power = point.power / scenario.optics.main_beam_fraction;
        const LifetimeEnergyCost lifetime =
            energy_used_lifetime(optical_power, *options.lifetime_hours, price, options.wall_plug);
        doc["lifetime"] = {{"hours", *options.lifetime_hours},
                           {"price_USD_per_J", price},
                           {"wall_plug", options.wall_plug},
                           {"total_USD", lifetime.total},
                           {"USD_per_W_optical", lifetime.per_optical_watt},
                           {"USD_per_W_electrical", lifetime.per_electrical_watt}};
    }
    return Output{scenario.name, "energy", std::move(doc), std::nullopt};
}

Output cmd_roadmap(const Options& options) {
    const Scenario scenario = load(options);
    if (!scenario.laser_curve) {
        throw ValidationError("roadmap.a1_base", "roadmap needs a [roadmap] block");
    }
    std::optional<double> budget = scenario.budget;
    if (!options.budget.empty()) {
        budget = parse_quantity(options.budget, lookup_field("target.budget"));
    }
    std::vector<double> stages = options.stages;
    if (stages.empty()) {
        stages = scenario.beta ? std::vector<double>{starlight_designation(*scenario.beta)}
                               : std::vector<double>{1.0, 10.0, 20.0};
    }
    if (scenario.mode != Mode::optimized) {
        throw ValidationError("scenario.mode", "roadmap needs mode = optimized");
    }
    CostProblem base{stages.front() / 100.0, scenario.payload, scenario.sail, scenario.optics, scenario.metrics};
    const StagePlan plan = plan_stages(stages, base, *scenario.laser_curve, scenario.optics_curve, budget);

    ResultTable table;
    table.columns = {"x",   "beta0", "entry_year", "entry_month", "months_after_reference", "a1_USD_per_W",
                     "a2_USD_per_m2", "d_m", "P0_W", "C_T", "cost_ratio_to_first"};
    const double first = plan.stages.front().design.breakdown.total;
    for (const Stage& stage : plan.stages) {
        table.rows.push_back({stage.designation, stage.beta, static_cast<double>(stage.entry.year()),
                              static_cast<double>(stage.entry.month()), stage.months_after_reference,
                              stage.metrics.laser, stage.metrics.optics, stage.design.aperture, stage.design.power,
                              stage.design.breakdown.total, stage.design.breakdown.total / first});
    }
    return Output{scenario.name, "roadmap", std::nullopt, std::move(table)};
}

int cmd_validate(std::ostream& out) {
    bool all = true;
    for (const CheckResult& check : run_golden_checks()) {
        out << (check.passed ? "PASS" : "FAIL") << " " << check.id << " " << check.name << ": " << check.detail
            << "\n";
        all = all && check.passed;
    }
    out << (all ? "all checks passed" : "some checks failed") << "\n";
    return all ? 0 : 1;
}

int exit_code_for(const Error& e) {
    const std::string& code = e.code();
    if (code == "numeric_range_error" || code == "convergence_error") {
        return 3;
    }
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cost model for beam-driven laser-sail propulsion", "sailcost"};
    app.require_subcommand(1);
    Options options;

    const auto add_common = [&options](CLI::App* sub, bool with_format = true) {
        sub->add_option("scenario", options.scenario_path, "Scenario file")->required()->check(CLI::ExistingFile);
        sub->add_option("--set", options.sets, "Override a field: section.key=value (repeatable)")
            ->allow_extra_args(false);
        if (with_format) {
            sub->add_option("--format", options.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        }
        sub->add_option("-o,--output", options.output, "Output file ('-' for stdout)");
        sub->add_flag("--metadata", options.metadata, "Add a generation timestamp to the output");
    };

    CLI::App* solve = app.add_subcommand("solve", "Kinematics, costs and energy at the scenario's d and P0");
    add_common(solve);
    CLI::App* optimize = app.add_subcommand("optimize", "Minimum-cost design for the beta0 target");
    add_common(optimize);
    optimize->add_flag("--numeric", options.numeric, "Use the golden-section search instead of the closed form");
    CLI::App* max_speed = app.add_subcommand("max-speed", "Fastest design within the budget target");
    add_common(max_speed);
    max_speed->add_flag("--numeric", options.numeric, "Use the golden-section search instead of the closed form");

    CLI::App* sweep = app.add_subcommand("sweep", "Evaluate the design over a range of one field");
    add_common(sweep);
    sweep->add_option("--axis", options.axis, "Field path to sweep, e.g. array.d")->required();
    sweep->add_flag("--log", options.log_scale, "Geometric spacing");
    sweep->add_flag("--linear", options.linear_scale, "Linear spacing (default)");
    sweep->add_option("--from", options.from, "First value with unit, e.g. 1km")->required();
    sweep->add_option("--to", options.to, "Last value with unit, e.g. 30km")->required();
    sweep->add_option("--points", options.points, "Number of points (>= 2)")->required();
    sweep->add_flag("--numeric", options.numeric, "Re-optimize each point numerically");

    CLI::App* energy = app.add_subcommand("energy", "Energy per launch and lifetime energy cost");
    add_common(energy);
    energy->add_option("--lifetime-hours", options.lifetime_hours, "Hours of operation over the array lifetime");
    energy->add_option("--energy-price", options.energy_price, "Grid energy price, e.g. '0.05 USD/kWh'");
    energy->add_option("--wall-plug", options.wall_plug, "Wall-plug efficiency in (0, 1]")->capture_default_str();

    CLI::App* roadmap = app.add_subcommand("roadmap", "Starlight stage ladder on the cost curves");
    add_common(roadmap);
    roadmap->add_option("--stages", options.stages, "Comma-separated designations x (percent of c)")
        ->delimiter(',')
        ->allow_extra_args(false);
    roadmap->add_option("--budget", options.budget, "Budget with unit, e.g. '10 BUSD'");

    CLI::App* validate = app.add_subcommand("validate", "Run the built-in golden checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage_error: " << e.what() << "\n";
        const CLI::App* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << active->help();
        return 2;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(out);
        }
        Output output;
        Format format = Format::json;
        if (solve->parsed()) {
            output = cmd_solve(options);
        } else if (optimize->parsed()) {
            output = cmd_optimize(options);
        } else if (max_speed->parsed()) {
            output = cmd_max_speed(options);
        } else if (sweep->parsed()) {
            output = cmd_sweep(options);
            format = Format::csv;
        } else if (energy->parsed()) {
            output = cmd_energy(options);
        } else {
            output = cmd_roadmap(options);
            format = Format::csv;
        }
        emit(output, options, format, out, err);
        return 0;
    } catch (const CLI::ValidationError& e) {
        err << "usage_error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        err << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << e.code() << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "internal_error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace sailcost
