#include "picardop/grid.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "picardop/errors.hpp"
#include "picardop/spectral.hpp"

namespace picardop {

GridSpec::GridSpec(int dim_, int points_per_axis_, int time_nodes_)
    : dim(dim_), points_per_axis(points_per_axis_), time_nodes(time_nodes_) {
    if (dim < 1) throw config_error("GridSpec: dim must be >= 1, got " + std::to_string(dim));
    if (points_per_axis < 2 || points_per_axis % 2 != 0)
        throw config_error("GridSpec: points_per_axis must be even and >= 2, got " +
                           std::to_string(points_per_axis));
    if (time_nodes < 2)
        throw config_error("GridSpec: time_nodes must be >= 2, got " + std::to_string(time_nodes));
}

std::size_t GridSpec::space_size() const {
    std::size_t n = 1;
    for (int r = 0; r < dim; ++r) n *= static_cast<std::size_t>(points_per_axis);
    return n;
}

bool GridSpec::resolves_rank(int rank) const {
    return rank >= 0 && points_per_axis >= 2 * rank + 2;
}

double GridSpec::coordinate(int k) const {
    return 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(points_per_axis);
}

int GridSpec::signed_freq(int k) const {
    return k <= points_per_axis / 2 ? k : k - points_per_axis;
}

double GridSpec::freq_sq(std::size_t flat) const {
    double s = 0.0;
    std::size_t rem = flat;
    for (int r = dim - 1; r >= 0; --r) {
        const int k = static_cast<int>(rem % static_cast<std::size_t>(points_per_axis));
        rem /= static_cast<std::size_t>(points_per_axis);
        const double f = static_cast<double>(signed_freq(k));
        s += f * f;
    }
    return s;
}

std::vector<int> GridSpec::freq_vector(std::size_t flat) const {
    std::vector<int> out(static_cast<std::size_t>(dim));
    std::size_t rem = flat;
    for (int r = dim - 1; r >= 0; --r) {
        const int k = static_cast<int>(rem % static_cast<std::size_t>(points_per_axis));
        rem /= static_cast<std::size_t>(points_per_axis);
        out[static_cast<std::size_t>(r)] = signed_freq(k);
    }
    return out;
}

namespace {

void check_size(const GridSpec& spec, std::size_t n, const char* what) {
    if (n != spec.space_size())
        throw config_error(std::string(what) + ": array size " + std::to_string(n) +
                           " does not match grid size " + std::to_string(spec.space_size()));
}

// u_hat(-xi) = conj(u_hat(xi)); exact no-op for already-symmetric data.
void conjugate_symmetrize(const GridSpec& spec, std::vector<std::complex<double>>& c) {
    const int m = spec.points_per_axis;
    const std::size_t n = c.size();
    std::vector<std::complex<double>> mirror(n);
    for (std::size_t flat = 0; flat < n; ++flat) {
        std::size_t rem = flat, neg = 0, stride = 1;
        for (int r = spec.dim - 1; r >= 0; --r) {
            const std::size_t k = rem % static_cast<std::size_t>(m);
            rem /= static_cast<std::size_t>(m);
            const std::size_t nk = (m - k) % static_cast<std::size_t>(m);
            neg += nk * stride;
            stride *= static_cast<std::size_t>(m);
        }
        mirror[flat] = std::conj(c[neg]);
    }
    for (std::size_t i = 0; i < n; ++i) c[i] = 0.5 * (c[i] + mirror[i]);
}

} // namespace

TorusField TorusField::from_values(const GridSpec& spec, std::vector<double> values) {
    check_size(spec, values.size(), "TorusField::from_values");
    for (double v : values)
        if (!std::isfinite(v)) throw numeric_error("TorusField: non-finite value in input");
    auto spectrum = detail::dft_forward(spec, values);
    return TorusField(spec, std::move(values), std::move(spectrum));
}

TorusField TorusField::from_spectrum(const GridSpec& spec, std::vector<std::complex<double>> spectrum) {
    check_size(spec, spectrum.size(), "TorusField::from_spectrum");
    for (const auto& c : spectrum)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw numeric_error("TorusField: non-finite coefficient in input");
    conjugate_symmetrize(spec, spectrum);
    auto values = detail::dft_inverse_real(spec, spectrum);
    return TorusField(spec, std::move(values), std::move(spectrum));
}

TorusField TorusField::zero(const GridSpec& spec) {
    return TorusField(spec, std::vector<double>(spec.space_size(), 0.0),
                      std::vector<std::complex<double>>(spec.space_size(), {0.0, 0.0}));
}

TorusField TorusField::constant(const GridSpec& spec, double c) {
    std::vector<std::complex<double>> spectrum(spec.space_size(), {0.0, 0.0});
    spectrum[0] = {c, 0.0};
    return TorusField(spec, std::vector<double>(spec.space_size(), c), std::move(spectrum));
}

TrajectoryField::TrajectoryField(GridSpec spec, std::vector<TorusField> slices, double horizon)
    : spec_(spec), slices_(std::move(slices)), horizon_(horizon) {
    if (horizon_ <= 0.0) throw config_error("TrajectoryField: horizon must be positive");
    if (slices_.size() != static_cast<std::size_t>(spec_.time_nodes))
        throw config_error("TrajectoryField: expected " + std::to_string(spec_.time_nodes) +
                           " slices, got " + std::to_string(slices_.size()));
    for (const auto& s : slices_)
        if (!(s.spec() == spec_)) throw config_error("TrajectoryField: slice grid mismatch");
}

TrajectoryField TrajectoryField::zero(const GridSpec& spec, double horizon) {
    return TrajectoryField(spec, std::vector<TorusField>(static_cast<std::size_t>(spec.time_nodes),
                                                         TorusField::zero(spec)),
                           horizon);
}

double TrajectoryField::time_at(int j) const {
    return horizon_ * static_cast<double>(j) / static_cast<double>(spec_.time_nodes - 1);
}

TorusField add(const TorusField& a, const TorusField& b) {
    if (!(a.spec() == b.spec())) throw config_error("add: grid mismatch");
    std::vector<double> v(a.values());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values()[i];
    return TorusField::from_values(a.spec(), std::move(v));
}

TorusField sub(const TorusField& a, const TorusField& b) {
    if (!(a.spec() == b.spec())) throw config_error("sub: grid mismatch");
    std::vector<double> v(a.values());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values()[i];
    return TorusField::from_values(a.spec(), std::move(v));
}

TorusField scale(const TorusField& a, double c) {
    std::vector<double> v(a.values());
    for (double& x : v) x *= c;
    return TorusField::from_values(a.spec(), std::move(v));
}

TrajectoryField sub(const TrajectoryField& a, const TrajectoryField& b) {
    if (!(a.spec() == b.spec())) throw config_error("sub: trajectory grid mismatch");
    std::vector<TorusField> out;
    out.reserve(a.slices().size());
    for (std::size_t j = 0; j < a.slices().size(); ++j) out.push_back(sub(a.slices()[j], b.slices()[j]));
    return TrajectoryField(a.spec(), std::move(out), a.horizon());
}

} // namespace picardop
