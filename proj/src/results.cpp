#include "sailcost/results.hpp"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <ostream>

#include "sailcost/errors.hpp"

namespace sailcost {

std::string format_number(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (ec != std::errc{}) {
        throw NumericRangeError("cannot format number");
    }
    return std::string(buffer, ptr);
}

Format parse_format(std::string_view text) {
    if (text == "csv") {
        return Format::csv;
    }
    if (text == "json") {
        return Format::json;
    }
    throw ConfigError("unknown format '" + std::string(text) + "' (expected csv or json)");
}

std::string to_csv(const ResultTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += i ? "," : "";
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw ValidationError("rows", "result row has " + std::to_string(row.size()) + " values for " +
                                              std::to_string(table.columns.size()) + " columns");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += i ? "," : "";
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json to_json(const ResultTable& table) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw ValidationError("rows", "result row width does not match the header");
        }
        nlohmann::ordered_json item = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            item[table.columns[i]] = row[i];
        }
        rows.push_back(std::move(item));
    }
    return rows;
}

std::size_t write_text(const std::string& text, const std::filesystem::path& path, std::ostream& stdout_stream) {
    if (path == "-") {
        stdout_stream << text;
        stdout_stream.flush();
        if (!stdout_stream) {
            throw IoError("cannot write to stdout");
        }
        return text.size();
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing: " + std::strerror(errno));
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) {
        throw IoError("cannot write '" + path.string() + "': " + std::strerror(errno));
    }
    return text.size();
}

std::size_t write_results(const ResultTable& table, Format format, const std::filesystem::path& path,
                          std::ostream& stdout_stream) {
    const std::string text = format == Format::csv ? to_csv(table) : to_json(table).dump(2) + "\n";
    return write_text(text, path, stdout_stream);
}

nlohmann::ordered_json optimum_document(const Scenario& scenario, const OptimumDesign& design,
                                        const ShotEnergy& energy) {
    const CostBreakdown& c = design.breakdown;
    const KinematicsResult& k = design.kinematics;
    nlohmann::ordered_json doc;
    doc["scenario"] = scenario.name;
    doc["mode"] = std::string(to_string(scenario.mode));
    doc["optimum"] = {{"d_m", design.aperture}, {"P0_W", design.power}};
    doc["costs"] = {{"C1", c.laser},        {"C2", c.optics},       {"C3", c.energy},
                    {"C4", c.storage},      {"C_T", c.total},       {"f1", c.fractions[0]},
                    {"f2", c.fractions[1]}, {"f3", c.fractions[2]}, {"f4", c.fractions[3]}};
    doc["kinematics"] = {{"v0", k.speed},
                         {"beta0", k.beta},
                         {"t0_s", k.time},
                         {"L0_m", k.distance},
                         {"v_inf", k.coast_speed}};
    doc["energy"] = {{"E_gamma_J", energy.photon_energy}, {"E_storage_J", energy.storage_energy}};
    return doc;
}

ResultTable optimum_table(const OptimumDesign& design, const ShotEnergy& energy) {
    const CostBreakdown& c = design.breakdown;
    const KinematicsResult& k = design.kinematics;
    return ResultTable{
        {"d_m", "P0_W", "C1", "C2", "C3", "C4", "C_T", "f1", "f2", "f3", "f4", "v0", "beta0", "t0_s", "L0_m",
         "v_inf", "E_gamma_J", "E_storage_J"},
        {{design.aperture, design.power, c.laser, c.optics, c.energy, c.storage, c.total, c.fractions[0],
          c.fractions[1], c.fractions[2], c.fractions[3], k.speed, k.beta, k.time, k.distance, k.coast_speed,
          energy.photon_energy, energy.storage_energy}}};
}

}  // namespace sailcost
