#pragma once

// Tabular and JSON result output. Numbers are written in the shortest form that
// round-trips to the same double.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sailcost/cost_model.hpp"
#include "sailcost/energy.hpp"
#include "sailcost/scenario.hpp"

namespace sailcost {

[[nodiscard]] std::string format_number(double value);

enum class Format { csv, json };

/// Parses "csv" or "json". Throws ConfigError otherwise.
[[nodiscard]] Format parse_format(std::string_view text);

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// CSV text: header line, comma separated, LF line endings.
[[nodiscard]] std::string to_csv(const ResultTable& table);

/// JSON array of row objects keyed by column name.
[[nodiscard]] nlohmann::ordered_json to_json(const ResultTable& table);

/// Writes `text` to `path` ("-" for `stdout_stream`). Returns bytes written.
/// Throws IoError naming the path and the OS cause.
std::size_t write_text(const std::string& text, const std::filesystem::path& path, std::ostream& stdout_stream);

std::size_t write_results(const ResultTable& table, Format format, const std::filesystem::path& path,
                          std::ostream& stdout_stream);

/// Full report for one optimum design.
[[nodiscard]] nlohmann::ordered_json optimum_document(const Scenario& scenario, const OptimumDesign& design,
                                                      const ShotEnergy& energy);

/// Single-row table with the same figures as `optimum_document`.
[[nodiscard]] ResultTable optimum_table(const OptimumDesign& design, const ShotEnergy& energy);

}  // namespace sailcost
