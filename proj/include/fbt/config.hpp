#pragma once

#include <cstdint>
#include <string>

namespace fbt {

/// Effective run configuration; echoed into every report. Absent config
/// keys keep the documented defaults below. Environment variables are
/// never consulted.
struct RunConfig {
    std::uint64_t seed = 1;

    double tol_residual_rel = 1e-10;
    double tol_rank_rel = 1e-8;
    double tol_eval_rel = 1e-10;

    int grid_radii = 64;
    int grid_angles = 128;
    double grid_r_max = 20.0;

    int d_max = 24;
    int deg_max = 10;
    int nvars_max = 6;

    std::string output_path;       // empty = stdout
    std::string format = "json";   // json | jsonl | csv
    bool timestamp = true;

    /// Throws std::invalid_argument when a cap or tolerance is out of range.
    void validate() const;

    /// Flat key-value text, one `key = value` per line, '#' comments.
    static RunConfig load(const std::string& path);
};

std::string tool_version();

}  // namespace fbt
