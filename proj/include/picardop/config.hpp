#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "picardop/grid.hpp"
#include "picardop/nonlinearity.hpp"
#include "picardop/picard.hpp"
#include "picardop/sampling.hpp"

namespace picardop {

/// Flat key-value config with [sections]; grammar documented in FORMATS.md.
/// All randomness flows from `seeds`; no clock or OS entropy anywhere.
struct ExperimentConfig {
    std::string scenario;
    GridSpec grid{1, 64, 65};
    double R = 0.4, M = 1.0, L = 0.5, T = 0.5, delta = 0.25;
    double c_s = 1.0; // initial-data Lipschitz constant (1 for the torus Laplacian)
    int ell = 8, rank = 16;
    double eta = 0.01;
    InitialLaw law;
    std::string truth_spec = "sin amplitude=0.5";
    std::vector<std::string> member_specs;
    std::vector<std::uint64_t> seeds{1};
    std::string output_dir = "out";
    std::map<std::string, std::string> scenario_opts;

    PicardParams params() const;
    Nonlinearity truth(double M_override = -1.0) const;
    std::vector<Nonlinearity> members() const;

    /// Scenario-section accessors with defaults.
    double opt_num(const std::string& key, double fallback) const;
    std::vector<int> opt_int_list(const std::string& key, const std::vector<int>& fallback) const;
};

/// Parse a config file; throws config_error carrying line numbers on bad input.
ExperimentConfig load_config(const std::string& path);

/// Parse "name key=value ..." (the catalog grammar used in config files).
Nonlinearity parse_nonlinearity(const std::string& spec, double M);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> lines; // one evaluated inequality per line
};

/// Evaluate the smallness conditions R + T*L*M <= M and T*L <= delta < 1 with
/// both sides printed, plus law sanity; ok = false on any violation.
ValidationReport validate_config(const ExperimentConfig& cfg);

} // namespace picardop
