#include "fbt/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fbt {

std::string tool_version() { return "fbtk 0.1.0"; }

void RunConfig::validate() const {
    if (tol_residual_rel <= 0 || tol_rank_rel <= 0 || tol_eval_rel <= 0)
        throw std::invalid_argument("tolerances must be positive");
    if (d_max < 0 || d_max > 24) throw std::invalid_argument("D_max must lie in [0, 24]");
    if (nvars_max < 1 || nvars_max > 6) throw std::invalid_argument("nvars_max must lie in [1, 6]");
    if (grid_radii < 1 || grid_angles < 1 || grid_r_max <= 0)
        throw std::invalid_argument("grid parameters must be positive");
    if (format != "json" && format != "jsonl" && format != "csv")
        throw std::invalid_argument("format must be json, jsonl or csv");
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": expected key = value");
            continue;
        }
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            auto e = s.find_last_not_of(" \t\r");
            s.erase(e == std::string::npos ? 0 : e + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "residual_rel") cfg.tol_residual_rel = std::stod(val);
            else if (key == "rank_rel") cfg.tol_rank_rel = std::stod(val);
            else if (key == "eval_rel") cfg.tol_eval_rel = std::stod(val);
            else if (key == "radii") cfg.grid_radii = std::stoi(val);
            else if (key == "angles") cfg.grid_angles = std::stoi(val);
            else if (key == "R_max") cfg.grid_r_max = std::stod(val);
            else if (key == "D_max") cfg.d_max = std::stoi(val);
            else if (key == "deg_max") cfg.deg_max = std::stoi(val);
            else if (key == "nvars_max") cfg.nvars_max = std::stoi(val);
            else if (key == "output") cfg.output_path = val;
            else if (key == "format") cfg.format = val;
            else if (key == "timestamp") cfg.timestamp = (val == "true" || val == "1");
            else throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

}  // namespace fbt
