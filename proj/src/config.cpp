#include "picardop/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "picardop/errors.hpp"

namespace picardop {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream iss(s);
    while (std::getline(iss, cur, sep)) {
        cur = trim(cur);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

double to_num(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing");
        return x;
    } catch (const std::exception&) {
        throw config_error("config line " + std::to_string(line) + ": key '" + key +
                           "' has non-numeric value '" + v + "'");
    }
}

} // namespace

Nonlinearity parse_nonlinearity(const std::string& spec, double M) {
    std::istringstream iss(spec);
    std::string name;
    iss >> name;
    if (name.empty()) throw config_error("empty nonlinearity spec");
    CatalogParams p;
    std::string tok;
    while (iss >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw config_error("nonlinearity spec '" + spec + "': expected key=value, got '" + tok +
                               "'");
        const std::string key = tok.substr(0, eq);
        const double val = to_num(tok.substr(eq + 1), key, 0);
        if (key == "amplitude" || key == "a")
            p.amplitude = val;
        else if (key == "lambda")
            p.lambda = val;
        else if (key == "p")
            p.p = val;
        else if (key == "alpha")
            p.alpha = val;
        else if (key == "beta")
            p.beta = val;
        else
            throw config_error("nonlinearity spec '" + spec + "': unknown parameter '" + key + "'");
    }
    return catalog(name, p, M);
}

PicardParams ExperimentConfig::params() const {
    PicardParams p(R, M, L, T, delta, ell, rank);
    p.c_s = c_s;
    return p;
}

Nonlinearity ExperimentConfig::truth(double M_override) const {
    return parse_nonlinearity(truth_spec, M_override > 0.0 ? M_override : M);
}

std::vector<Nonlinearity> ExperimentConfig::members() const {
    std::vector<Nonlinearity> out;
    out.reserve(member_specs.size());
    for (const auto& s : member_specs) out.push_back(parse_nonlinearity(s, M));
    return out;
}

double ExperimentConfig::opt_num(const std::string& key, double fallback) const {
    const auto it = scenario_opts.find(key);
    if (it == scenario_opts.end()) return fallback;
    return to_num(it->second, key, 0);
}

std::vector<int> ExperimentConfig::opt_int_list(const std::string& key,
                                                const std::vector<int>& fallback) const {
    const auto it = scenario_opts.find(key);
    if (it == scenario_opts.end()) return fallback;
    std::vector<int> out;
    for (const auto& tok : split(it->second, ','))
        out.push_back(static_cast<int>(to_num(tok, key, 0)));
    return out;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    ExperimentConfig cfg;
    cfg.member_specs.clear();
    std::string section;
    std::string raw;
    int line = 0;
    int grid_dim = 1, grid_m = 64, grid_nt = 65;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        const auto hash = s.find('#');
        if (hash != std::string::npos) s = trim(s.substr(0, hash));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw config_error("config line " + std::to_string(line) + ": unterminated section");
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(line) +
                               ": expected 'key = value', got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty())
            throw config_error("config line " + std::to_string(line) + ": empty key or value");

        if (section.empty()) {
            if (key == "scenario")
                cfg.scenario = val;
            else if (key == "schema") {
                if (to_num(val, key, line) != 1.0)
                    throw config_error("config line " + std::to_string(line) +
                                       ": unsupported schema version " + val);
            } else
                throw config_error("config line " + std::to_string(line) + ": unknown top-level key '" +
                                   key + "'");
        } else if (section == "grid") {
            if (key == "dim")
                grid_dim = static_cast<int>(to_num(val, key, line));
            else if (key == "points_per_axis")
                grid_m = static_cast<int>(to_num(val, key, line));
            else if (key == "time_nodes")
                grid_nt = static_cast<int>(to_num(val, key, line));
            else
                throw config_error("config line " + std::to_string(line) + ": unknown [grid] key '" +
                                   key + "'");
        } else if (section == "params") {
            if (key == "R") cfg.R = to_num(val, key, line);
            else if (key == "M") cfg.M = to_num(val, key, line);
            else if (key == "L") cfg.L = to_num(val, key, line);
            else if (key == "T") cfg.T = to_num(val, key, line);
            else if (key == "delta") cfg.delta = to_num(val, key, line);
            else if (key == "c_s") cfg.c_s = to_num(val, key, line);
            else if (key == "ell") cfg.ell = static_cast<int>(to_num(val, key, line));
            else if (key == "rank") cfg.rank = static_cast<int>(to_num(val, key, line));
            else if (key == "eta") cfg.eta = to_num(val, key, line);
            else
                throw config_error("config line " + std::to_string(line) + ": unknown [params] key '" +
                                   key + "'");
        } else if (section == "law") {
            if (key == "s_gp") cfg.law.s_gp = to_num(val, key, line);
            else if (key == "sigma") cfg.law.sigma = to_num(val, key, line);
            else if (key == "band") cfg.law.band = static_cast<int>(to_num(val, key, line));
            else if (key == "s0") cfg.law.s0 = to_num(val, key, line);
            else if (key == "r0") cfg.law.r0 = to_num(val, key, line);
            else
                throw config_error("config line " + std::to_string(line) + ": unknown [law] key '" +
                                   key + "'");
        } else if (section == "family") {
            if (key == "truth") cfg.truth_spec = val;
            else if (key == "members") cfg.member_specs = split(val, ';');
            else
                throw config_error("config line " + std::to_string(line) + ": unknown [family] key '" +
                                   key + "'");
        } else if (section == "run") {
            if (key == "seeds") {
                cfg.seeds.clear();
                for (const auto& tok : split(val, ','))
                    cfg.seeds.push_back(static_cast<std::uint64_t>(to_num(tok, key, line)));
                if (cfg.seeds.empty())
                    throw config_error("config line " + std::to_string(line) + ": empty seed list");
            } else if (key == "output_dir")
                cfg.output_dir = val;
            else
                throw config_error("config line " + std::to_string(line) + ": unknown [run] key '" +
                                   key + "'");
        } else if (section == "scenario") {
            cfg.scenario_opts[key] = val;
        } else {
            throw config_error("config line " + std::to_string(line) + ": unknown section [" +
                               section + "]");
        }
    }
    cfg.grid = GridSpec(grid_dim, grid_m, grid_nt);
    cfg.law.sup_bound = cfg.R;
    return cfg;
}

ValidationReport validate_config(const ExperimentConfig& cfg) {
    ValidationReport rep;
    std::ostringstream oss;
    auto check = [&](bool ok, const std::string& text) {
        rep.lines.push_back(std::string(ok ? "ok    " : "FAIL  ") + text);
        rep.ok = rep.ok && ok;
    };
    {
        std::ostringstream o;
        o << "R + T*L*M <= M : " << cfg.R << " + " << cfg.T * cfg.L * cfg.M << " = "
          << cfg.R + cfg.T * cfg.L * cfg.M << " vs " << cfg.M;
        check(cfg.R + cfg.T * cfg.L * cfg.M <= cfg.M * (1.0 + 1e-12), o.str());
    }
    {
        std::ostringstream o;
        o << "T*L <= delta < 1 : " << cfg.T * cfg.L << " vs " << cfg.delta;
        check(cfg.T * cfg.L <= cfg.delta && cfg.delta < 1.0, o.str());
    }
    {
        std::ostringstream o;
        o << "grid resolves rank : points_per_axis " << cfg.grid.points_per_axis << " >= 2*"
          << cfg.rank << "+2";
        check(cfg.grid.resolves_rank(cfg.rank), o.str());
    }
    {
        std::ostringstream o;
        o << "law band resolvable and s0 > d/2 : band " << cfg.law.band << ", s0 " << cfg.law.s0;
        check(cfg.grid.resolves_rank(cfg.law.band) && cfg.law.s0 > cfg.grid.dim / 2.0, o.str());
    }
    {
        bool ok = true;
        std::string msg = "truth and members admissible in F_{M,L}";
        try {
            require_admissible(cfg.truth(), cfg.M, cfg.L);
            for (const auto& f : cfg.members()) require_admissible(f, cfg.M, cfg.L);
        } catch (const std::exception& e) {
            ok = false;
            msg += std::string(" : ") + e.what();
        }
        check(ok, msg);
    }
    return rep;
}

} // namespace picardop
