#pragma once

#include <optional>
#include <vector>

#include "picardop/grid.hpp"
#include "picardop/nonlinearity.hpp"
#include "picardop/semigroup.hpp"

namespace picardop {

/// Smallness constants: R + T*L*M <= M and T*L <= delta < 1 are enforced at
/// construction (the conditions under which the Picard map is a
/// delta-contractive self-map of the ball U_M, with C_S = 1 on the torus).
struct PicardParams {
    double R;          // initial-data sup bound
    double M;          // solution sup bound
    double L;          // Lipschitz class bound
    double T;          // block horizon
    double delta;      // contraction factor in (0,1)
    double c_s = 1.0;  // initial-data Lipschitz constant (1 on the torus)
    int ell = 1;       // Picard depth
    int rank = 0;      // Fourier rank N (Truncated models)

    PicardParams(double R_, double M_, double L_, double T_, double delta_, int ell_ = 1,
                 int rank_ = 0);
};

/// A Picard transition: exact semigroup + catalog nonlinearity gives the
/// abstract class member; truncated semigroup + slope-constrained
/// piecewise-linear nonlinearity gives the Picard-type Fourier neural operator.
struct PicardModel {
    PicardParams params;
    Nonlinearity nonlinearity;
    SemigroupKind semigroup;

    PicardModel(PicardParams params_, Nonlinearity F, SemigroupKind kind);

    /// FNO constructor: replaces F by rho = build_rho(F, M, L, eta) and the
    /// semigroup by Truncated(params.rank).
    static PicardModel fno(PicardParams params, const Nonlinearity& F, double eta);
};

/// One Picard update T[v](t) = S(t) u0 + K[F(v)](t) on the time grid of v.
/// Requires sup(u0) <= R and sup(v) <= M (up to 1e-8 slack). The t=0 slice is
/// S(0)u0: u0 itself for the exact kind, its Fejer projection when truncated.
TrajectoryField picard_step(const PicardModel& model, const TorusField& u0,
                            const TrajectoryField& v);

/// ell-fold composition starting from the zero trajectory (depth 0 == zero).
TrajectoryField iterate(const PicardModel& model, const TorusField& u0, int ell,
                        const GridSpec& grid, double horizon);
TrajectoryField iterate(const PicardModel& model, const TorusField& u0, int ell,
                        const GridSpec& grid);

struct FixedPointResult {
    TrajectoryField trajectory;
    int iterations;
    double last_update;       // sup |u^{(k)} - u^{(k-1)}| at exit
    double a_posteriori;      // delta/(1-delta) * last_update
};

/// Iterate until sup|u^{(k+1)}-u^{(k)}| <= tol*(1-delta); throws
/// solver_stall_error after 10*ceil(log tol / log delta) steps.
FixedPointResult solve_fixed_point(const PicardModel& model, const TorusField& u0, double tol,
                                   const GridSpec& grid);

/// sup |iterate(ell) - reference|; the reference must come from
/// solve_fixed_point on the same grid at tol well below the expected error.
double truncation_error(const PicardModel& model, const TorusField& u0, int ell,
                        const TrajectoryField& reference, const GridSpec& grid);

struct ImplementationErrorReport {
    double total = 0.0;        // max_u0 sup |FNO iterate - exact iterate|
    double rho_term = 0.0;     // exact semigroup, rho vs F
    double fourier_term = 0.0; // rho fixed, truncated vs exact semigroup
};

/// Depth-ell gap between the abstract model and its FNO realization over a
/// test set, split as in the two-term decomposition
/// |FNO - exact| <= |FNO - exact-semigroup-rho| + |exact-semigroup-rho - exact|.
ImplementationErrorReport implementation_error(const PicardModel& exact_model,
                                               const PicardModel& fno_model,
                                               const std::vector<TorusField>& test_set,
                                               const GridSpec& grid);

} // namespace picardop
