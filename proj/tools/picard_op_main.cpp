#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "picardop/config.hpp"
#include "picardop/errors.hpp"
#include "picardop/scenarios.hpp"

namespace {

std::string scenario_list() {
    std::string out;
    for (const auto& n : picardop::scenario_names()) out += (out.empty() ? "" : ", ") + n;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"picard-op: Picard-type operator learning verification harness"};
    std::string scenario, config_path, out_dir, seeds_arg;
    app.add_option("scenario", scenario, "scenario name or 'validate' (" + scenario_list() + ")")
        ->required();
    app.add_option("--config", config_path, "experiment config file")->required();
    app.add_option("--out", out_dir, "output directory override");
    app.add_option("--seeds", seeds_arg, "comma-separated seed list override");
    CLI11_PARSE(app, argc, argv);

    try {
        picardop::ExperimentConfig cfg = picardop::load_config(config_path);
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        if (!seeds_arg.empty()) {
            cfg.seeds.clear();
            std::size_t pos = 0;
            while (pos < seeds_arg.size()) {
                const auto comma = seeds_arg.find(',', pos);
                const std::string tok = seeds_arg.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                cfg.seeds.push_back(static_cast<std::uint64_t>(std::stoull(tok)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }

        if (scenario == "validate") {
            const auto report = picardop::validate_config(cfg);
            for (const auto& line : report.lines) std::cout << line << '\n';
            std::cout << (report.ok ? "config valid" : "config INVALID") << '\n';
            return report.ok ? 0 : 1;
        }

        bool known = false;
        for (const auto& n : picardop::scenario_names()) known = known || n == scenario;
        if (!known) {
            std::cerr << "unknown scenario '" << scenario << "'; valid scenarios: " << scenario_list()
                      << " (or 'validate')\n";
            return 2;
        }
        cfg.scenario = scenario;

        const auto validation = picardop::validate_config(cfg);
        if (!validation.ok) {
            for (const auto& line : validation.lines) std::cerr << line << '\n';
            std::cerr << "config validation failed\n";
            return 1;
        }

        const picardop::ScenarioResult result = picardop::run_scenario(cfg);
        for (const auto& f : result.files_written) std::cout << "wrote " << f << '\n';
        std::cout << "scenario " << scenario << ": " << (result.passed ? "PASS" : "FAIL") << '\n';
        return result.passed ? 0 : 1;
    } catch (const picardop::config_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
