#include "picardop/risk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "picardop/errors.hpp"
#include "picardop/rng.hpp"
#include "picardop/spectral.hpp"

namespace picardop {

double pairwise_sum(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    std::vector<double> level(xs);
    while (level.size() > 1) {
        std::vector<double> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }
    return level[0];
}

double clipped_loss(double pred, double target, double M) {
    const double c = std::clamp(pred, -M, M);
    const double d = c - target;
    return d * d;
}

std::vector<TrajectorySample> make_dataset(const InitialLaw& law, const PicardModel& truth,
                                           const GridSpec& grid, int n, int q, std::uint64_t seed,
                                           double ref_tol, double noise_sigma) {
    if (truth.semigroup.truncated_kind())
        throw config_error("make_dataset: the truth model must use the exact semigroup");
    if (n < 0 || q < 1) throw config_error("make_dataset: need n >= 0 and q >= 1");
    if (ref_tol > 1e-8) throw config_error("make_dataset: reference tolerance must be <= 1e-8");
    InitialLaw seeded = law;
    seeded.seed = seed;
    const auto fields = sample_initial(seeded, grid, n);
    std::vector<TrajectorySample> data;
    data.reserve(static_cast<std::size_t>(n));
    const std::size_t space = grid.space_size();
    const double M = truth.params.M;
    for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed ^ 0x51a7e5a3d1ULL, static_cast<std::uint64_t>(i));
        TrajectorySample s{fields[static_cast<std::size_t>(i)], {}, {}};
        const auto sol = solve_fixed_point(truth, s.u0, ref_tol, grid).trajectory;
        for (int j = 0; j < q; ++j) {
            const std::size_t x = rng.uniform_index(space);
            const int t = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(grid.time_nodes)));
            s.queries.emplace_back(x, t);
            s.targets.push_back(sol.slice(t).values()[x]);
        }
        // noise draws follow all query draws, so the same seed yields the same
        // query set with and without noise
        if (noise_sigma > 0.0)
            for (double& y : s.targets) y = std::clamp(y + noise_sigma * rng.normal(), -M, M);
        data.push_back(std::move(s));
    }
    return data;
}

TrajectoryField Predictor::predict(const TorusField& u0, const GridSpec& grid) const {
    if (sensors) {
        const TorusField rec = reconstruct(*sensors, observe(*sensors, u0), grid, s0, r0);
        return iterate(model, rec, ell, grid);
    }
    return iterate(model, u0, ell, grid);
}

RiskReport empirical_risk(const Predictor& predictor, const std::vector<TrajectorySample>& data,
                          const GridSpec& grid) {
    if (data.empty()) throw config_error("empirical_risk: dataset is empty");
    const double M = predictor.model.params.M;
    RiskReport rep;
    rep.n = static_cast<int>(data.size());
    rep.q = static_cast<int>(data.front().queries.size());
    rep.per_block.reserve(data.size());
    for (const auto& s : data) {
        const TrajectoryField pred = predictor.predict(s.u0, grid);
        std::vector<double> losses;
        losses.reserve(s.queries.size());
        for (std::size_t j = 0; j < s.queries.size(); ++j) {
            const auto [x, t] = s.queries[j];
            losses.push_back(clipped_loss(pred.slice(t).values()[x], s.targets[j], M));
        }
        rep.per_block.push_back(pairwise_sum(losses) / static_cast<double>(losses.size()));
    }
    rep.empirical = pairwise_sum(rep.per_block) / static_cast<double>(rep.per_block.size());
    return rep;
}

RiskReport empirical_risk_finite(const PicardModel& model, int ell, const SensorSet& sensors,
                                 double s0, double r0, const std::vector<TrajectorySample>& data,
                                 const GridSpec& grid) {
    Predictor lifted{model, ell, sensors, s0, r0};
    return empirical_risk(lifted, data, grid);
}

ErmResult erm(const CandidateFamily& family, const PicardParams& params, int ell,
              const std::vector<TrajectorySample>& data, const GridSpec& grid) {
    if (family.members.empty()) throw config_error("erm: candidate family is empty");
    ErmResult res;
    res.member_risks.reserve(family.members.size());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < family.members.size(); ++k) {
        PicardModel model(params, family.members[k], SemigroupKind::exact());
        Predictor p{std::move(model), ell, std::nullopt};
        RiskReport r = empirical_risk(p, data, grid);
        if (r.empirical < best) {
            best = r.empirical;
            res.selected = static_cast<int>(k);
        }
        res.member_risks.push_back(std::move(r));
    }
    return res;
}

RademacherEstimate rademacher_mc(const CandidateFamily& family, const PicardParams& params, int ell,
                                 const std::vector<TrajectorySample>& data, const GridSpec& grid,
                                 int n_draws, std::uint64_t seed) {
    if (n_draws < 1) throw config_error("rademacher_mc: n_draws must be >= 1");
    if (data.empty()) throw config_error("rademacher_mc: dataset is empty");
    const std::size_t n = data.size();
    const std::size_t q = data.front().queries.size();
    const std::size_t cols = n * q;
    const std::size_t members = family.members.size();
    // prediction matrix, clipped to [-M,M]
    std::vector<double> preds(members * cols);
    for (std::size_t b = 0; b < members; ++b) {
        PicardModel model(params, family.members[b], SemigroupKind::exact());
        for (std::size_t i = 0; i < n; ++i) {
            const TrajectoryField traj = iterate(model, data[i].u0, ell, grid);
            for (std::size_t j = 0; j < q; ++j) {
                const auto [x, t] = data[i].queries[j];
                preds[b * cols + i * q + j] =
                    std::clamp(traj.slice(t).values()[x], -params.M, params.M);
            }
        }
    }
    Rng rng(seed);
    const double scale = 1.0 / (static_cast<double>(n) * std::sqrt(static_cast<double>(q)));
    std::vector<double> sigma(cols);
    std::vector<double> draws;
    draws.reserve(static_cast<std::size_t>(n_draws));
    for (int d = 0; d < n_draws; ++d) {
        for (std::size_t c = 0; c < cols; ++c) sigma[c] = rng.sign();
        double sup_pos = -std::numeric_limits<double>::infinity();
        double sup_neg = -std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < members; ++b) {
            double s = 0.0;
            const double* row = preds.data() + b * cols;
            for (std::size_t c = 0; c < cols; ++c) s += sigma[c] * row[c];
            sup_pos = std::max(sup_pos, s);
            sup_neg = std::max(sup_neg, -s); // antithetic draw -sigma
        }
        draws.push_back(0.5 * (sup_pos + sup_neg) * scale);
    }
    RademacherEstimate est;
    est.value = pairwise_sum(draws) / static_cast<double>(draws.size());
    double var = 0.0;
    for (double v : draws) var += (v - est.value) * (v - est.value);
    est.std_error = std::sqrt(var / static_cast<double>(draws.size())) /
                    std::sqrt(static_cast<double>(draws.size()));
    return est;
}

BoundReport bound_rhs(const PicardParams& params, int n, int q, double rho, double eta,
                      double a_N_measured, double C, double rademacher_value) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("bound_rhs: rho must lie in (0,1)");
    if (n < 1) throw std::domain_error("bound_rhs: n must be >= 1");
    (void)q; // query count enters only through the trajectory-normalized complexity
    const double M = params.M, delta = params.delta, L = params.L, T = params.T;
    const double geom = (1.0 - std::pow(delta, params.ell)) / (1.0 - delta);
    BoundReport rep;
    rep.rho = rho;
    rep.imp_term = 4.0 * M * (geom * T * eta + a_N_measured);
    rep.truncation_term = M * M * std::pow(delta, 2.0 * params.ell) / ((1.0 - delta) * (1.0 - delta));
    if (rademacher_value >= 0.0)
        rep.rademacher_term = C * M * rademacher_value;
    else
        rep.rademacher_term = C * M * M * std::sqrt(L * T * geom / static_cast<double>(n));
    rep.concentration_term = C * M * M * std::sqrt(std::log(1.0 / rho) / static_cast<double>(n));
    rep.total = rep.imp_term + rep.truncation_term + rep.rademacher_term + rep.concentration_term;
    return rep;
}

BudgetPlan plan_budget(const PicardParams& params, long long n, double beta, double alpha) {
    if (!(params.delta > 0.0 && params.delta < 1.0))
        throw std::domain_error("plan_budget: delta must lie in (0,1)");
    if (!(beta > 0.0) || alpha < 0.0)
        throw std::domain_error("plan_budget: need beta > 0 and alpha >= 0");
    if (n < 1) throw std::domain_error("plan_budget: n must be >= 1");
    BudgetPlan plan;
    const double raw_ell =
        std::ceil(std::log(static_cast<double>(n)) / (4.0 * std::abs(std::log(params.delta))));
    plan.ell_n = static_cast<int>(raw_ell);
    if (plan.ell_n < 1) {
        plan.ell_n = 1;
        plan.clamped = true;
    }
    const double raw_m =
        std::round(std::pow(static_cast<double>(n), 1.0 / (2.0 * (2.0 * beta + alpha))));
    plan.m_n = static_cast<int>(raw_m);
    if (plan.m_n < 2) {
        plan.m_n = 2;
        plan.clamped = true;
    }
    return plan;
}

} // namespace picardop
