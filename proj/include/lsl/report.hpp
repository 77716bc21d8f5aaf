#pragma once

#include "lsl/classify.hpp"
#include "lsl/jet.hpp"
#include "lsl/types.hpp"

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lsl {

struct GridSpec {
    int nu = 32, nv = 32;
};

/// A region-level verdict with a witness (when true) or counterexample
/// (when false) point and a short note.
struct Verdict {
    bool value = false;
    bool has_point = false;
    double u = 0, v = 0;
    std::string note;
};

struct PointError {
    double u = 0, v = 0;
    std::string message;
};

/// Self-contained result of sweeping a grid over a chart: per-point
/// records, census aggregates and the surface-level verdicts.
struct RegionReport {
    std::string tool_version = kToolVersion;
    std::string surface;
    std::string family;
    std::map<std::string, std::string> params;
    Domain domain{0, 1, 0, 1};
    GridSpec grid;
    Tolerances tol;

    std::vector<std::optional<PointClassification>> points;  // row-major, u index outer
    std::vector<PointError> errors;

    std::array<long, 4> census_counts{};  // indexed by CensusKind
    long near_double_count = 0;
    long flat_count = 0;
    long inconsistent_count = 0;
    bool root_sign_obstruction = false;
    bool witness_sign_obstruction = false;

    Verdict planar, pseudo_planar, pseudo_umbilic, umbilic, maximal;

    bool ok() const { return errors.empty(); }
};

/// Samples the chart domain on an inclusive nu x nv grid, classifies every
/// point, aligns frames and direction fields along a fixed serpentine
/// traversal and aggregates the surface-level verdicts. Per-point failures
/// are collected with their coordinates instead of aborting the sweep.
RegionReport classify_region(const SurfaceChart& chart, const GridSpec& grid,
                             const Tolerances& tol = {});

/// One JSON document with a fixed key order; doubles carry 17 significant
/// digits so output is byte-stable and round-trips exactly.
void emit_json(const RegionReport& report, std::ostream& os);

/// One row per classified grid point under a fixed documented header.
void emit_csv(const RegionReport& report, std::ostream& os);

/// Human-readable summary: exactly one line per global verdict plus the
/// census histogram.
void emit_text(const RegionReport& report, std::ostream& os);

}  // namespace lsl
