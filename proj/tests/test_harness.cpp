#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "picardop/config.hpp"
#include "picardop/errors.hpp"
#include "picardop/io.hpp"
#include "picardop/scenarios.hpp"

using namespace picardop;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << body;
    return path;
}

const char* kBasicConfig = R"(# comment line
schema = 1
scenario = depth-sensor-plan

[grid]
dim = 1
points_per_axis = 64
time_nodes = 65

[params]
R = 0.4
M = 1.0
L = 0.5
T = 0.5
delta = 0.25
ell = 8
rank = 16
eta = 0.01

[law]
s_gp = 3.0
sigma = 0.12
band = 8
s0 = 2.0
r0 = 1.0

[family]
truth = sin amplitude=0.5
members = zero; linear amplitude=0.5; tanh amplitude=0.5

[run]
seeds = 1, 2
output_dir = harness_out

[scenario]
n_list = 1, 4096, 10000
beta = 1.5
alpha = 0
)";

} // namespace

TEST_CASE("config parsing") {
    const auto path = write_temp("picardop_basic.cfg", kBasicConfig);
    const ExperimentConfig cfg = load_config(path.string());
    CHECK(cfg.scenario == "depth-sensor-plan");
    CHECK(cfg.grid.points_per_axis == 64);
    CHECK(cfg.delta == 0.25);
    CHECK(cfg.c_s == 1.0);
    CHECK(cfg.params().c_s == 1.0);
    CHECK(cfg.law.band == 8);
    CHECK(cfg.law.sup_bound == 0.4); // tied to R
    CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2});
    CHECK(cfg.member_specs.size() == 3);
    CHECK(cfg.truth().tag == "sin");
    CHECK(cfg.truth().lipschitz_cert == doctest::Approx(0.5));
    CHECK(cfg.opt_num("beta", 0.0) == 1.5);
    CHECK(cfg.opt_int_list("n_list", {}) == std::vector<int>{1, 4096, 10000});
}

TEST_CASE("config parse errors carry line numbers") {
    const auto path = write_temp("picardop_bad.cfg", "schema = 1\n[params]\nbogus_key = 3\n");
    try {
        load_config(path.string());
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    const auto path2 = write_temp("picardop_bad2.cfg", "justtext\n");
    CHECK_THROWS_AS(load_config(path2.string()), config_error);
}

TEST_CASE("nonlinearity grammar") {
    const Nonlinearity f = parse_nonlinearity("defocusing alpha=1 beta=0.5 p=3", 1.0);
    CHECK(f.tag == "defocusing");
    CHECK(f.lipschitz_cert == doctest::Approx(2.5));
    CHECK_THROWS_AS(parse_nonlinearity("sin wobble=2", 1.0), config_error);
    CHECK_THROWS_AS(parse_nonlinearity("", 1.0), config_error);
}

TEST_CASE("validation report evaluates each inequality") {
    const auto path = write_temp("picardop_basic2.cfg", kBasicConfig);
    ExperimentConfig cfg = load_config(path.string());
    CHECK(validate_config(cfg).ok);

    cfg.delta = 1.0;
    const auto bad = validate_config(cfg);
    CHECK_FALSE(bad.ok);
    bool found = false;
    for (const auto& line : bad.lines)
        if (line.find("FAIL") != std::string::npos && line.find("delta") != std::string::npos)
            found = true;
    CHECK(found);

    cfg.delta = 0.25;
    cfg.R = 1.0; // R = M with L, T > 0
    CHECK_FALSE(validate_config(cfg).ok);
}

TEST_CASE("round_sig12 and csv formatting") {
    CHECK(format_sig12(0.1) == "0.1");
    CHECK(format_sig12(1234567.0) == "1234567");
    CHECK(round_sig12(1.0 / 3.0) == doctest::Approx(0.333333333333).epsilon(1e-13));
    CsvTable t({"a", "b"});
    t.add_row({1.5, 2.0 / 3.0});
    CHECK(t.to_string() == "a,b\n1.5,0.666666666667\n");
}

TEST_CASE("unknown scenario lists the valid names") {
    ExperimentConfig cfg;
    cfg.scenario = "bogus";
    try {
        run_scenario(cfg);
        FAIL("expected config_error");
    } catch (const config_error& e) {
        const std::string what = e.what();
        for (const auto& n : scenario_names()) CHECK(what.find(n) != std::string::npos);
    }
}

TEST_CASE("depth-sensor-plan scenario emits deterministic artifacts") {
    const auto path = write_temp("picardop_basic3.cfg", kBasicConfig);
    ExperimentConfig cfg = load_config(path.string());
    const auto out1 = std::filesystem::temp_directory_path() / "picardop_out1";
    const auto out2 = std::filesystem::temp_directory_path() / "picardop_out2";
    std::filesystem::remove_all(out1);
    std::filesystem::remove_all(out2);

    cfg.output_dir = out1.string();
    const ScenarioResult r1 = run_scenario(cfg);
    CHECK(r1.passed);
    cfg.output_dir = out2.string();
    const ScenarioResult r2 = run_scenario(cfg);

    for (std::size_t i = 0; i < r1.files_written.size(); ++i) {
        std::ifstream f1(r1.files_written[i], std::ios::binary);
        std::ifstream f2(r2.files_written[i], std::ios::binary);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        CHECK(s1.str() == s2.str()); // byte identical
        CHECK(!s1.str().empty());
    }

    // plan table pins the corollary arithmetic: header + one row per n
    std::ifstream csv(out1 / "depth_sensor_plan.csv");
    std::string line;
    std::getline(csv, line);
    CHECK(line == "n,ell_n,m_n,clamped");
    std::getline(csv, line);
    CHECK(line.rfind("1,1,2,1", 0) == 0); // n=1 clamps both budgets
    std::getline(csv, line);
    CHECK(line == "4096,2,4,0"); // ell = ceil(ln 4096/(4 ln 4)) = 2, m = 4096^{1/6} = 4
}

TEST_CASE("summary json carries the schema tag") {
    const auto path = write_temp("picardop_basic4.cfg", kBasicConfig);
    ExperimentConfig cfg = load_config(path.string());
    cfg.output_dir = (std::filesystem::temp_directory_path() / "picardop_out3").string();
    const ScenarioResult r = run_scenario(cfg);
    CHECK(r.summary.at("schema") == 1);
    CHECK(r.summary.at("scenario") == "depth-sensor-plan");
    CHECK(r.summary.contains("passed"));
}
