#include "picardop/rollout.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "picardop/errors.hpp"
#include "picardop/spectral.hpp"

namespace picardop {

TorusField terminal_trace(const TrajectoryField& u) { return u.slices().back(); }

TorusField clip_state(const TorusField& f, double R) {
    std::vector<double> v(f.values());
    for (double& x : v) x = std::clamp(x, -R, R);
    return TorusField::from_values(f.spec(), std::move(v));
}

namespace {

int count_clips(const TorusField& f, double R) {
    int c = 0;
    for (double x : f.values())
        if (x > R || x < -R) ++c;
    return c;
}

double mean_squared_gap(const TrajectoryField& a, const TrajectoryField& b) {
    double acc = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < a.slices().size(); ++j) {
        const auto& av = a.slices()[j].values();
        const auto& bv = b.slices()[j].values();
        for (std::size_t i = 0; i < av.size(); ++i) {
            const double d = av[i] - bv[i];
            acc += d * d;
        }
        count += av.size();
    }
    return acc / static_cast<double>(count);
}

} // namespace

RolloutTrace rollout(const TorusField& u0, const PicardModel& truth, const PicardModel& approx,
                     int kappa, double ref_tol, const GridSpec& grid) {
    if (kappa < 1) throw config_error("rollout: kappa must be >= 1");
    if (truth.semigroup.truncated_kind())
        throw config_error("rollout: the truth model must use the exact semigroup");
    const double R = truth.params.R;
    const int ell = approx.params.ell;

    RolloutTrace trace;
    trace.kappa = kappa;
    trace.exact_states.push_back(u0);
    trace.approx_states.push_back(u0);
    trace.block_errors.push_back(0.0);
    if (sup_norm(u0) > R + 1e-12)
        throw horizon_exceeded_error("rollout: initial state already outside sup <= R", 0);

    for (int j = 0; j < kappa; ++j) {
        const TorusField& v = trace.exact_states.back();
        const TorusField& vh = trace.approx_states.back();

        const TrajectoryField exact_block = solve_fixed_point(truth, v, ref_tol, grid).trajectory;
        const TrajectoryField approx_block = iterate(approx, vh, ell, grid);
        // local errors at both visited states
        const TrajectoryField exact_at_vh = solve_fixed_point(truth, vh, ref_tol, grid).trajectory;
        const TrajectoryField approx_at_v = iterate(approx, v, ell, grid);
        trace.eps_loc = std::max({trace.eps_loc, sup_norm(sub(approx_block, exact_at_vh)),
                                  sup_norm(sub(approx_at_v, exact_block))});
        trace.block_risks.push_back(mean_squared_gap(approx_block, exact_block));

        const TorusField v_next = terminal_trace(exact_block);
        if (sup_norm(v_next) > R + 1e-12)
            throw horizon_exceeded_error(
                "rollout: exact state left the admissible ball at block " + std::to_string(j + 1),
                j + 1);
        const TorusField psi_hat = terminal_trace(approx_block);
        trace.clip_events.push_back(count_clips(psi_hat, R));
        const TorusField vh_next = clip_state(psi_hat, R);

        trace.block_errors.push_back(sup_norm(sub(vh_next, v_next)));
        trace.exact_states.push_back(v_next);
        trace.approx_states.push_back(vh_next);
    }

    // local error at the terminal states (the state set includes j = kappa)
    const TrajectoryField exact_tail =
        solve_fixed_point(truth, trace.exact_states.back(), ref_tol, grid).trajectory;
    const TrajectoryField approx_tail = iterate(approx, trace.approx_states.back(), ell, grid);
    const TrajectoryField exact_tail_vh =
        solve_fixed_point(truth, trace.approx_states.back(), ref_tol, grid).trajectory;
    const TrajectoryField approx_tail_v = iterate(approx, trace.exact_states.back(), ell, grid);
    trace.eps_loc = std::max({trace.eps_loc, sup_norm(sub(approx_tail, exact_tail_vh)),
                              sup_norm(sub(approx_tail_v, exact_tail))});
    return trace;
}

std::vector<double> stability_envelope(const PicardParams& params, int kappa, double eps_loc,
                                       const EnvelopeMode& mode) {
    if (kappa < 1) throw config_error("stability_envelope: kappa must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(kappa));
    const double eps2 = eps_loc * eps_loc;
    if (!mode.dissipative) {
        const double a = params.c_s / (1.0 - params.delta); // L_psi = 1
        double partial = 0.0, power = 1.0;
        for (int j = 0; j < kappa; ++j) {
            partial += power;
            power *= a;
            out.push_back(partial * partial * eps2);
        }
    } else {
        const double q = std::exp(-mode.lambda * params.T);
        for (int j = 0; j < kappa; ++j) {
            const double factor = 1.0 + (1.0 - std::pow(q, j)) / (1.0 - q);
            out.push_back(factor * factor * eps2);
        }
    }
    return out;
}

} // namespace picardop
