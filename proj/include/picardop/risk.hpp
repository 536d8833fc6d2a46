#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picardop/grid.hpp"
#include "picardop/picard.hpp"
#include "picardop/sampling.hpp"

namespace picardop {

/// One trajectory block: an initial datum, q space-time query points, and the
/// reference-solver target values (all bounded by M).
struct TrajectorySample {
    TorusField u0;
    std::vector<std::pair<std::size_t, int>> queries; // (flat space index, time node)
    std::vector<double> targets;
};

/// Finite set of candidate equation specifications, all inside F_{M,L}.
struct CandidateFamily {
    std::vector<Nonlinearity> members;
    bool contains_truth = false;
    int truth_index = -1;
};

struct RiskReport {
    double empirical = 0.0;
    std::vector<double> per_block;
    int n = 0;
    int q = 0;
};

struct BoundReport {
    double imp_term = 0.0;
    double truncation_term = 0.0;
    double rademacher_term = 0.0;
    double concentration_term = 0.0;
    double total = 0.0;
    double rho = 0.1; // confidence level
};

/// (clip(pred,[-M,M]) - target)^2, bounded by 4M^2.
double clipped_loss(double pred, double target, double M);

/// n blocks with q uniform queries each; targets from the fixed-point solver
/// at the given tolerance (required <= 1e-8). Deterministic per seed. The
/// truth model must use the exact semigroup. noise_sigma > 0 adds Gaussian
/// target noise clamped to [-M,M]; it defaults to off and no acceptance
/// threshold depends on it.
std::vector<TrajectorySample> make_dataset(const InitialLaw& law, const PicardModel& truth,
                                           const GridSpec& grid, int n, int q, std::uint64_t seed,
                                           double ref_tol = 1e-9, double noise_sigma = 0.0);

/// A predictor is a Picard model evaluated at depth ell, optionally behind the
/// sensor pipeline (lifted finite-observation model:
/// u0 -> reconstruct(observe(u0)) -> iterate).
struct Predictor {
    PicardModel model;
    int ell;
    std::optional<SensorSet> sensors; // engaged => finite-observation lift
    double s0 = 2.0;                  // reconstruction ball parameters (lift only)
    double r0 = 1.0;

    TrajectoryField predict(const TorusField& u0, const GridSpec& grid) const;
};

/// Mean over blocks of mean over queries of the clipped loss. Summation uses
/// a fixed pairwise order, so results are reproducible bit-for-bit.
RiskReport empirical_risk(const Predictor& predictor, const std::vector<TrajectorySample>& data,
                          const GridSpec& grid);

/// Finite-observation risk of the un-lifted model: identical code path to
/// evaluating the lifted predictor in empirical_risk, so L[G_m^up] = L_m[G_m]
/// holds bit-exactly.
RiskReport empirical_risk_finite(const PicardModel& model, int ell, const SensorSet& sensors,
                                 double s0, double r0, const std::vector<TrajectorySample>& data,
                                 const GridSpec& grid);

struct ErmResult {
    int selected = 0;
    std::vector<RiskReport> member_risks;
};

/// Exhaustive empirical-risk minimization over the family at depth ell
/// (abstract class: exact semigroup). Ties break to the lowest index.
ErmResult erm(const CandidateFamily& family, const PicardParams& params, int ell,
              const std::vector<TrajectorySample>& data, const GridSpec& grid);

struct RademacherEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Monte-Carlo estimate of the trajectory-normalized empirical Rademacher
/// complexity E_sigma sup_b (n sqrt(q))^{-1} sum_ij sigma_ij b(u0_i, z_ij)
/// over the family at depth ell. Draws are antithetic sign-vector pairs.
RademacherEstimate rademacher_mc(const CandidateFamily& family, const PicardParams& params, int ell,
                                 const std::vector<TrajectorySample>& data, const GridSpec& grid,
                                 int n_draws, std::uint64_t seed);

/// Right-hand side of the depth-ell generalization bound:
///   4M{ (1-delta^ell)/(1-delta) T eta + a_N } + M^2 delta^{2 ell}/(1-delta)^2
///   + C * (rademacher term) + C M^2 sqrt(log(1/rho)/n).
/// The rademacher term is C*M*rademacher_value when a measured value >= 0 is
/// supplied, else the closed form C M^2 sqrt(LT(1-delta^ell)/((1-delta) n)).
BoundReport bound_rhs(const PicardParams& params, int n, int q, double rho, double eta,
                      double a_N_measured, double C = 1.0, double rademacher_value = -1.0);

struct BudgetPlan {
    int ell_n = 1;
    int m_n = 2;
    bool clamped = false; // either quantity hit its floor
};

/// Depth and sensor budgets: ell_n = ceil(log n / (4 |log delta|)) clamped to
/// >= 1, m_n = round(n^{1/(2(2 beta + alpha))}) clamped to >= 2.
BudgetPlan plan_budget(const PicardParams& params, long long n, double beta, double alpha);

/// Fixed-order pairwise (tree) summation.
double pairwise_sum(const std::vector<double>& xs);

} // namespace picardop
