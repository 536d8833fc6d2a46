#pragma once

#include <span>

#include "picardop/grid.hpp"

namespace picardop {

/// Exact heat semigroup e^{t*Laplacian} or its Fejer-truncated version
/// S_N(t) = P_N e^{t*Laplacian}. Both are L-infinity non-expansive.
struct SemigroupKind {
    enum class Variant { Exact, Truncated };
    Variant variant = Variant::Exact;
    int rank = 0; // Fourier rank N, Truncated only

    static SemigroupKind exact() { return {Variant::Exact, 0}; }
    static SemigroupKind truncated(int rank) { return {Variant::Truncated, rank}; }
    bool truncated_kind() const { return variant == Variant::Truncated; }
};

/// e^{-t|xi|^2}. Throws std::domain_error for t < 0.
double heat_multiplier(std::span<const int> xi, double t);

/// Spectral multiply by the heat factor (times the Fejer mask when Truncated).
TorusField apply_semigroup(const SemigroupKind& kind, const TorusField& f, double t);

/// t -> S(t) u0 on the trajectory time grid.
TrajectoryField semigroup_trajectory(const SemigroupKind& kind, const TorusField& u0,
                                     const GridSpec& spec, double horizon);

/// Duhamel convolution K[g](t) = int_0^t S(t-tau) g(tau) dtau.
///
/// Each mode integrates the piecewise-linear-in-time interpolant of g_hat
/// against e^{-(t-tau)|xi|^2} exactly (exponential-integrator quadrature),
/// so sup |K[g]| <= t * max_nodes sup |g| holds mode-wise with no quadrature
/// slack. The lambda*h -> 0 limit of the weights is series-evaluated.
TrajectoryField duhamel(const SemigroupKind& kind, const TrajectoryField& g);

namespace detail {
// Quadrature weights for one step of size h with decay rate lambda=|xi|^2:
//   I(t_{i+1}) = e^{-z} I(t_i) + h*(phi_a(z) g_i + phi_b(z) g_{i+1}), z = lambda*h.
// phi_a(z) = (1 - e^{-z}(1+z))/z^2, phi_b(z) = (z - 1 + e^{-z})/z^2; both 1/2 at z=0.
double phi_a(double z);
double phi_b(double z);
} // namespace detail

} // namespace picardop
