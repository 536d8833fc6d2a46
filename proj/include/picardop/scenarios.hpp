#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "picardop/config.hpp"

namespace picardop {

struct ScenarioResult {
    bool passed = false;
    std::vector<std::string> files_written;
    nlohmann::json summary; // also written as <scenario>_summary.json
};

std::vector<std::string> scenario_names();

/// Run one named verification scenario: writes CSV tables and a JSON summary
/// under cfg.output_dir, returns the assertion outcome. Deterministic for a
/// fixed seed set. Throws config_error for unknown scenario names.
ScenarioResult run_scenario(const ExperimentConfig& cfg);

} // namespace picardop
