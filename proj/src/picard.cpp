#include "picardop/picard.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "picardop/errors.hpp"
#include "picardop/spectral.hpp"

namespace picardop {

namespace {
constexpr double kSupSlack = 1e-8;
}

PicardParams::PicardParams(double R_, double M_, double L_, double T_, double delta_, int ell_,
                           int rank_)
    : R(R_), M(M_), L(L_), T(T_), delta(delta_), ell(ell_), rank(rank_) {
    std::ostringstream oss;
    if (!(R > 0.0 && M > 0.0 && L >= 0.0 && T > 0.0)) {
        oss << "PicardParams: need R, M, T > 0 and L >= 0";
        throw config_error(oss.str());
    }
    if (R + T * L * M > M * (1.0 + 1e-12)) {
        oss << "PicardParams: R + T*L*M <= M violated (" << R << " + " << T * L * M << " > " << M
            << ")";
        throw config_error(oss.str());
    }
    if (!(T * L <= delta && delta < 1.0)) {
        oss << "PicardParams: T*L <= delta < 1 violated (T*L = " << T * L << ", delta = " << delta
            << ")";
        throw config_error(oss.str());
    }
    if (ell < 0) throw config_error("PicardParams: ell must be >= 0");
}

PicardModel::PicardModel(PicardParams params_, Nonlinearity F, SemigroupKind kind)
    : params(params_), nonlinearity(std::move(F)), semigroup(kind) {
    require_admissible(nonlinearity, params.M, params.L);
}

PicardModel PicardModel::fno(PicardParams params, const Nonlinearity& F, double eta) {
    const PiecewiseLinear rho = build_rho(F, params.M, params.L, eta);
    Nonlinearity wrapped = rho.as_nonlinearity(F.lipschitz_cert, "rho(" + F.tag + ")");
    return PicardModel(params, std::move(wrapped), SemigroupKind::truncated(params.rank));
}

TrajectoryField picard_step(const PicardModel& model, const TorusField& u0,
                            const TrajectoryField& v) {
    const auto& p = model.params;
    const double s0 = sup_norm(u0);
    if (s0 > p.R + kSupSlack)
        throw std::domain_error("picard_step: sup(u0) = " + std::to_string(s0) +
                                " exceeds R = " + std::to_string(p.R));
    const double sv = sup_norm(v);
    if (sv > p.M + kSupSlack)
        throw std::domain_error("picard_step: sup(v) = " + std::to_string(sv) +
                                " exceeds M = " + std::to_string(p.M) +
                                " (broken parameters or quadrature)");
    const TrajectoryField lin = semigroup_trajectory(model.semigroup, u0, v.spec(), v.horizon());
    const TrajectoryField g = apply_pointwise(model.nonlinearity, v);
    const TrajectoryField duh = duhamel(model.semigroup, g);
    std::vector<TorusField> out;
    out.reserve(lin.slices().size());
    for (std::size_t j = 0; j < lin.slices().size(); ++j)
        out.push_back(add(lin.slices()[j], duh.slices()[j]));
    return TrajectoryField(v.spec(), std::move(out), v.horizon());
}

TrajectoryField iterate(const PicardModel& model, const TorusField& u0, int ell,
                        const GridSpec& grid, double horizon) {
    if (ell < 0) throw config_error("iterate: ell must be >= 0");
    TrajectoryField u = TrajectoryField::zero(grid, horizon);
    for (int k = 0; k < ell; ++k) u = picard_step(model, u0, u);
    return u;
}

TrajectoryField iterate(const PicardModel& model, const TorusField& u0, int ell,
                        const GridSpec& grid) {
    return iterate(model, u0, ell, grid, model.params.T);
}

FixedPointResult solve_fixed_point(const PicardModel& model, const TorusField& u0, double tol,
                                   const GridSpec& grid) {
    if (!(tol > 0.0)) throw config_error("solve_fixed_point: tol must be positive");
    const double delta = model.params.delta;
    const int max_iter =
        10 * static_cast<int>(std::ceil(std::log(tol) / std::log(delta))) + 10;
    TrajectoryField u = TrajectoryField::zero(grid, model.params.T);
    for (int k = 1; k <= max_iter; ++k) {
        TrajectoryField next = picard_step(model, u0, u);
        const double d = sup_norm(sub(next, u));
        u = std::move(next);
        if (d <= tol * (1.0 - delta))
            return FixedPointResult{std::move(u), k, d, delta / (1.0 - delta) * d};
    }
    throw solver_stall_error(
        "solve_fixed_point: no convergence within " + std::to_string(max_iter) +
        " steps; the contraction precondition T*L <= delta is likely violated");
}

double truncation_error(const PicardModel& model, const TorusField& u0, int ell,
                        const TrajectoryField& reference, const GridSpec& grid) {
    return sup_norm(sub(iterate(model, u0, ell, grid), reference));
}

ImplementationErrorReport implementation_error(const PicardModel& exact_model,
                                               const PicardModel& fno_model,
                                               const std::vector<TorusField>& test_set,
                                               const GridSpec& grid) {
    if (exact_model.params.ell != fno_model.params.ell)
        throw config_error("implementation_error: depth mismatch between models");
    if (exact_model.semigroup.truncated_kind())
        throw config_error("implementation_error: first model must use the exact semigroup");
    const int ell = exact_model.params.ell;
    // intermediate: exact semigroup with the FNO's nonlinearity
    const PicardModel mid(exact_model.params, fno_model.nonlinearity, SemigroupKind::exact());
    ImplementationErrorReport rep;
    for (const auto& u0 : test_set) {
        const TrajectoryField a = iterate(exact_model, u0, ell, grid);
        const TrajectoryField b = iterate(mid, u0, ell, grid);
        const TrajectoryField c = iterate(fno_model, u0, ell, grid);
        rep.total = std::max(rep.total, sup_norm(sub(c, a)));
        rep.rho_term = std::max(rep.rho_term, sup_norm(sub(b, a)));
        rep.fourier_term = std::max(rep.fourier_term, sup_norm(sub(c, b)));
    }
    return rep;
}

} // namespace picardop
