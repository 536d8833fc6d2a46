#include "picardop/semigroup.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "picardop/errors.hpp"
#include "picardop/spectral.hpp"

namespace picardop {

namespace detail {

namespace {
// Taylor coefficients of phi_a: sum_k (-1)^k (k+1)/(k+2)! z^k, and
// phi_b: sum_k (-1)^k / (k+2)! z^k. 16 terms keep |z| < 0.5 at machine precision;
// the closed forms cancel catastrophically for small z.
constexpr int kSeriesTerms = 16;
constexpr double kSeriesCutoff = 0.5;

double series(double z, bool weight_a) {
    double factorial = 2.0; // (k+2)! starting at k=0
    double zk = 1.0;
    double acc = 0.0;
    for (int k = 0; k < kSeriesTerms; ++k) {
        const double c = (weight_a ? static_cast<double>(k + 1) : 1.0) / factorial;
        acc += (k % 2 == 0 ? c : -c) * zk;
        zk *= z;
        factorial *= static_cast<double>(k + 3);
    }
    return acc;
}
} // namespace

double phi_a(double z) {
    if (z < kSeriesCutoff) return series(z, true);
    return (1.0 - std::exp(-z) * (1.0 + z)) / (z * z);
}

double phi_b(double z) {
    if (z < kSeriesCutoff) return series(z, false);
    return (z - 1.0 + std::exp(-z)) / (z * z);
}

} // namespace detail

namespace {

void check_kind(const SemigroupKind& kind, const GridSpec& spec) {
    if (kind.truncated_kind() && !spec.resolves_rank(kind.rank))
        throw config_error("semigroup: truncated rank " + std::to_string(kind.rank) +
                           " not resolvable on grid with points_per_axis " +
                           std::to_string(spec.points_per_axis));
}

// Fejer weight per flattened spectral index (all ones for the exact kind).
std::vector<double> kind_mask(const SemigroupKind& kind, const GridSpec& spec) {
    std::vector<double> mask(spec.space_size(), 1.0);
    if (kind.truncated_kind()) {
        for (std::size_t flat = 0; flat < mask.size(); ++flat) {
            const auto freq = spec.freq_vector(flat);
            mask[flat] = fejer_mask(kind.rank, freq);
        }
    }
    return mask;
}

} // namespace

double heat_multiplier(std::span<const int> xi, double t) {
    if (t < 0.0) throw std::domain_error("heat_multiplier: t must be >= 0");
    double s = 0.0;
    for (int c : xi) s += static_cast<double>(c) * static_cast<double>(c);
    return std::exp(-t * s);
}

TorusField apply_semigroup(const SemigroupKind& kind, const TorusField& f, double t) {
    if (t < 0.0) throw std::domain_error("apply_semigroup: t must be >= 0");
    const GridSpec& spec = f.spec();
    check_kind(kind, spec);
    const auto mask = kind_mask(kind, spec);
    std::vector<std::complex<double>> s(f.spectrum());
    for (std::size_t flat = 0; flat < s.size(); ++flat)
        s[flat] *= mask[flat] * std::exp(-t * spec.freq_sq(flat));
    return TorusField::from_spectrum(spec, std::move(s));
}

TrajectoryField semigroup_trajectory(const SemigroupKind& kind, const TorusField& u0,
                                     const GridSpec& spec, double horizon) {
    if (!(u0.spec() == spec)) throw config_error("semigroup_trajectory: grid mismatch");
    check_kind(kind, spec);
    const auto mask = kind_mask(kind, spec);
    std::vector<TorusField> slices;
    slices.reserve(static_cast<std::size_t>(spec.time_nodes));
    for (int j = 0; j < spec.time_nodes; ++j) {
        const double t = horizon * static_cast<double>(j) / static_cast<double>(spec.time_nodes - 1);
        std::vector<std::complex<double>> s(u0.spectrum());
        for (std::size_t flat = 0; flat < s.size(); ++flat)
            s[flat] *= mask[flat] * std::exp(-t * spec.freq_sq(flat));
        slices.push_back(TorusField::from_spectrum(spec, std::move(s)));
    }
    return TrajectoryField(spec, std::move(slices), horizon);
}

TrajectoryField duhamel(const SemigroupKind& kind, const TrajectoryField& g) {
    const GridSpec& spec = g.spec();
    check_kind(kind, spec);
    const std::size_t n = spec.space_size();
    const int n_t = spec.time_nodes;
    const double h = g.time_step();
    const auto mask = kind_mask(kind, spec);

    std::vector<double> decay(n), wa(n), wb(n);
    for (std::size_t flat = 0; flat < n; ++flat) {
        const double z = spec.freq_sq(flat) * h;
        decay[flat] = std::exp(-z);
        wa[flat] = h * detail::phi_a(z);
        wb[flat] = h * detail::phi_b(z);
    }

    std::vector<TorusField> out;
    out.reserve(static_cast<std::size_t>(n_t));
    std::vector<std::complex<double>> acc(n, {0.0, 0.0});
    auto emit = [&]() {
        std::vector<std::complex<double>> s(acc);
        for (std::size_t flat = 0; flat < n; ++flat) s[flat] *= mask[flat];
        out.push_back(TorusField::from_spectrum(spec, std::move(s)));
    };
    emit(); // t = 0
    for (int j = 0; j + 1 < n_t; ++j) {
        const auto& gj = g.slice(j).spectrum();
        const auto& gj1 = g.slice(j + 1).spectrum();
        for (std::size_t flat = 0; flat < n; ++flat)
            acc[flat] = decay[flat] * acc[flat] + wa[flat] * gj[flat] + wb[flat] * gj1[flat];
        emit();
    }
    return TrajectoryField(spec, std::move(out), g.horizon());
}

} // namespace picardop
