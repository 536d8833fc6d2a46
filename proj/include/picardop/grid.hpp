#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace picardop {

/// Uniform periodic grid on [0,2pi)^d plus a uniform time grid on [0,T].
///
/// points_per_axis must be even so the signed frequency set
/// {-m/2, ..., m/2-1} is well defined; a Fourier rank N is resolvable on the
/// grid iff points_per_axis >= 2N+2, which makes every Fejer-truncated field
/// exactly representable.
struct GridSpec {
    int dim = 1;              // d >= 1 (d in {1,2} exercised; 3 admitted, untested)
    int points_per_axis = 2;  // m, even, >= 2
    int time_nodes = 2;       // n_t >= 2, nodes t_j = j*T/(n_t-1)

    GridSpec() = default;
    GridSpec(int dim_, int points_per_axis_, int time_nodes_);

    std::size_t space_size() const;                 // m^d
    bool resolves_rank(int rank) const;             // m >= 2*rank + 2
    double coordinate(int k) const;                 // 2*pi*k/m
    /// Signed frequency of axis index k: k for k <= m/2, k-m otherwise.
    int signed_freq(int k) const;
    /// |xi|^2 for the flattened (row-major) spectral index.
    double freq_sq(std::size_t flat) const;
    /// Per-axis signed frequencies for a flattened index.
    std::vector<int> freq_vector(std::size_t flat) const;

    bool operator==(const GridSpec&) const = default;
};

/// Real scalar field on the grid with a consistent spectral view.
///
/// Coefficient convention: u_hat(xi) = m^{-d} * sum_k u(x_k) e^{-i xi.x_k}
/// (discrete mean convention). For a band-limited field this equals the
/// continuum coefficient in the (2pi)^{-d/2} e^{i xi.x} basis divided by
/// (2pi)^{d/2}; masks and multipliers are convention-invariant. Conjugate
/// symmetry u_hat(-xi) = conj(u_hat(xi)) holds by construction.
class TorusField {
public:
    static TorusField from_values(const GridSpec& spec, std::vector<double> values);
    static TorusField from_spectrum(const GridSpec& spec, std::vector<std::complex<double>> spectrum);
    static TorusField zero(const GridSpec& spec);
    static TorusField constant(const GridSpec& spec, double c);

    const GridSpec& spec() const { return spec_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::complex<double>>& spectrum() const { return spectrum_; }

private:
    TorusField(GridSpec spec, std::vector<double> values, std::vector<std::complex<double>> spectrum)
        : spec_(spec), values_(std::move(values)), spectrum_(std::move(spectrum)) {}

    GridSpec spec_;
    std::vector<double> values_;
    std::vector<std::complex<double>> spectrum_;
};

/// Time-indexed sequence of fields over the nodes of [0,T].
class TrajectoryField {
public:
    TrajectoryField(GridSpec spec, std::vector<TorusField> slices, double horizon);

    static TrajectoryField zero(const GridSpec& spec, double horizon);

    const GridSpec& spec() const { return spec_; }
    const std::vector<TorusField>& slices() const { return slices_; }
    const TorusField& slice(int j) const { return slices_[static_cast<std::size_t>(j)]; }
    double horizon() const { return horizon_; }
    double time_at(int j) const;
    double time_step() const { return horizon_ / (spec_.time_nodes - 1); }

private:
    GridSpec spec_;
    std::vector<TorusField> slices_;
    double horizon_;
};

TorusField add(const TorusField& a, const TorusField& b);
TorusField sub(const TorusField& a, const TorusField& b);
TorusField scale(const TorusField& a, double c);
TrajectoryField sub(const TrajectoryField& a, const TrajectoryField& b);

} // namespace picardop
