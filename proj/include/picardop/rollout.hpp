#pragma once

#include <vector>

#include "picardop/grid.hpp"
#include "picardop/picard.hpp"

namespace picardop {

/// Long-time prediction record: the exact and approximate state ladders, and
/// per-block error/risk/clip diagnostics. States v_0 = v_hat_0 = u0; block j
/// covers global time [jT, (j+1)T].
struct RolloutTrace {
    int kappa = 0;
    std::vector<TorusField> exact_states;  // v_0 .. v_kappa
    std::vector<TorusField> approx_states; // v_hat_0 .. v_hat_kappa
    std::vector<double> block_errors;      // e_j = sup|v_hat_j - v_j|, j = 0..kappa
    std::vector<double> block_risks;       // mean squared gap on block j, j = 0..kappa-1
    std::vector<int> clip_events;          // clipped grid points per block transition
    double eps_loc = 0.0;                  // max local error over all visited states
};

/// Last time slice u(T); 1-Lipschitz from the trajectory sup norm.
TorusField terminal_trace(const TrajectoryField& u);

/// Pointwise clip to [-R,R]; nonexpansive in the sup norm.
TorusField clip_state(const TorusField& f, double R);

/// kappa blocks: exact states from fresh fixed-point solves of the truth model
/// per block; approximate states from the approx model's depth-ell iterate
/// followed by the clip. Aborts with horizon_exceeded_error if an exact state
/// leaves the ball sup <= R. eps_loc is measured over both ladders' states
/// (j = 0..kappa), matching the rollout-relevant state set.
RolloutTrace rollout(const TorusField& u0, const PicardModel& truth, const PicardModel& approx,
                     int kappa, double ref_tol, const GridSpec& grid);

struct EnvelopeMode {
    bool dissipative = false;
    double lambda = 0.0; // strict dissipativity rate (dissipative mode)

    static EnvelopeMode generic() { return {false, 0.0}; }
    static EnvelopeMode dissipative_rate(double lambda) { return {true, lambda}; }
};

/// Certified per-block upper bounds for the block risks given a measured local
/// error: generic mode (sum_{r<=j} (L_psi C_S/(1-delta))^r)^2 eps^2; dissipative
/// mode (1 + (1-q^j)/(1-q))^2 eps^2 with q = e^{-lambda T}, uniformly bounded
/// in the block index.
std::vector<double> stability_envelope(const PicardParams& params, int kappa, double eps_loc,
                                       const EnvelopeMode& mode);

} // namespace picardop
