#pragma once

#include <cstdint>
#include <vector>

#include "picardop/grid.hpp"

namespace picardop {

/// Band-limited Gaussian spectral law conditioned on the Sobolev ball
/// { ||u||_{H^{s0}} <= r0 } (and on sup |u| <= sup_bound, checked per draw).
/// Coefficient xi gets an independent centered complex Gaussian with variance
/// sigma^2 (1+|xi|^2)^{-s_gp}, conjugate-symmetrized; modes outside the cube
/// |xi_r| <= band are zero.
struct InitialLaw {
    double s_gp = 3.0;      // spectral decay exponent
    double sigma = 1.0;     // amplitude
    int band = 8;           // max frequency K per axis
    double s0 = 2.0;        // Sobolev index (> d/2)
    double r0 = 1.0;        // ball radius R_0
    double sup_bound = 1.0; // R; embedding surrogate checked on every draw
    std::uint64_t seed = 0;
};

struct SampleStats {
    long long draws = 0;
    long long accepted = 0;
    double acceptance_rate() const {
        return draws == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(draws);
    }
};

/// n conditioned draws; deterministic per (law.seed, sample index), so samples
/// are reproducible under concurrent generation. Throws config_error if the
/// acceptance rate falls below 1e-3 after 1e4 draws.
std::vector<TorusField> sample_initial(const InitialLaw& law, const GridSpec& spec, int count,
                                       SampleStats* stats = nullptr);

/// Point-evaluation sensors. Locations are grid indices so evaluation is exact.
struct SensorSet {
    std::vector<std::size_t> flat_indices; // on the computational grid
    int per_axis = 0;                      // sensors per axis (equispaced)

    std::size_t count() const { return flat_indices.size(); }

    /// m equispaced sensors (d=1), or a p x p tensor grid with p^2 = m (d=2).
    /// Requires the per-axis count to divide points_per_axis.
    static SensorSet equispaced(const GridSpec& spec, int m);
};

struct Observation {
    std::vector<double> readings;
};

/// P_m u0 = (u0(xi_1), ..., u0(xi_m)), exact point evaluations.
Observation observe(const SensorSet& sensors, const TorusField& u0);

/// Trigonometric interpolation through the readings (band <= m/2 per axis,
/// Nyquist split symmetrically), then Sobolev-ball projection: coefficients
/// are rescaled when ||.||_{H^{s0}} > r0 so the map lands in U_0.
TorusField reconstruct(const SensorSet& sensors, const Observation& obs, const GridSpec& spec,
                       double s0, double r0);

/// Monte-Carlo estimate of E sup|E(P_m u0) - u0|^2 over n_mc law draws
/// (an upper bound for the best reconstruction map, since E is fixed).
double reconstruction_error(const InitialLaw& law, const SensorSet& sensors, const GridSpec& spec,
                            int n_mc);

} // namespace picardop
