#pragma once

// Command-line front end. Exit codes:
//   0  success
//   1  validation, unit, parse or infeasibility error in the input
//   2  usage error
//   3  internal or numeric error
//
// Errors go to `err` as `error_code: message`. Results go to stdout, to
// --output, or (when SAILCOST_OUTPUT_DIR is set and --output is not given) to
// <dir>/<scenario>-<subcommand>.<csv|json>.

#include <iosfwd>
#include <string>
#include <vector>

namespace sailcost {

inline constexpr const char* output_dir_env = "SAILCOST_OUTPUT_DIR";

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sailcost
