#pragma once

#include "lsl/jet.hpp"
#include "lsl/report.hpp"
#include "lsl/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lsl {

enum class OutputFormat { Json, Csv, Text };

/// Validated configuration of one `analyze` invocation.
struct RunConfig {
    std::string family;
    std::string f_expr, g_expr, rho_expr;
    double alpha = 1.0, beta = 1.0;
    double phi0 = 0.3, phi1 = 1.7, xi0 = 0.2, xi1 = 0.9;  // ruled parameters
    std::optional<Domain> domain;
    GridSpec grid{32, 32};
    Tolerances tol;
    OutputFormat format = OutputFormat::Text;
    std::string out_path;  // empty: stdout
};

/// Names of the built-in surface families accepted by --family.
const std::vector<std::string>& builtin_families();

/// Parses `analyze` arguments (without the subcommand word). Unknown flags
/// are rejected; defaults are documented in --help. Throws ValidationError
/// or ParseError.
RunConfig parse_config(const std::vector<std::string>& args);

/// Builds the configured chart (profile expressions compiled here).
SurfaceChart build_chart(const RunConfig& config);

/// Runs the grid sweep for a validated config. Deterministic for a fixed
/// config.
RegionReport run(const RunConfig& config);

/// Serializes a report in the requested format.
void emit(const RegionReport& report, OutputFormat format, std::ostream& os);

/// Writes to config.out_path (or `out` when the path is empty).
void emit_to_path(const RegionReport& report, const RunConfig& config, std::ostream& out);

/// Full command-line entry point: `analyze ...` | `families` | `--help`.
/// Returns the process exit code: 0 success, 1 per-point errors in the
/// sweep, 2 usage/config errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsl
