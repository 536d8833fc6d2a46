#include "picardop/sampling.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "picardop/errors.hpp"
#include "picardop/rng.hpp"
#include "picardop/spectral.hpp"

namespace picardop {

namespace {

// One symmetrized band-limited draw. Modes are visited in flat order; the
// representative of each {xi, -xi} pair (first in flat order) consumes two
// normals, the mirror is its conjugate, self-conjugate modes are real.
TorusField draw_field(const InitialLaw& law, const GridSpec& spec, Rng& rng) {
    const int m = spec.points_per_axis;
    const std::size_t n = spec.space_size();
    std::vector<std::complex<double>> c(n, {0.0, 0.0});
    const double inv_sqrt2 = 0.70710678118654752440;
    for (std::size_t flat = 0; flat < n; ++flat) {
        const auto freq = spec.freq_vector(flat);
        bool in_band = true;
        for (int f : freq)
            if (std::abs(f) > law.band) in_band = false;
        if (!in_band) continue;

        // mirror index of -xi
        std::size_t neg = 0, stride = 1, rem = flat;
        for (int r = spec.dim - 1; r >= 0; --r) {
            const std::size_t k = rem % static_cast<std::size_t>(m);
            rem /= static_cast<std::size_t>(m);
            neg += ((static_cast<std::size_t>(m) - k) % static_cast<std::size_t>(m)) * stride;
            stride *= static_cast<std::size_t>(m);
        }
        if (neg < flat) continue; // handled when the mirror was visited

        double fs = 0.0;
        for (int f : freq) fs += static_cast<double>(f) * static_cast<double>(f);
        const double sd = law.sigma * std::pow(1.0 + fs, -law.s_gp / 2.0);
        if (neg == flat) {
            c[flat] = {sd * rng.normal(), 0.0};
        } else {
            const std::complex<double> z{sd * inv_sqrt2 * rng.normal(),
                                         sd * inv_sqrt2 * rng.normal()};
            c[flat] = z;
            c[neg] = std::conj(z);
        }
    }
    return TorusField::from_spectrum(spec, std::move(c));
}

} // namespace

std::vector<TorusField> sample_initial(const InitialLaw& law, const GridSpec& spec, int count,
                                       SampleStats* stats) {
    if (law.band < 0 || !spec.resolves_rank(law.band))
        throw config_error("sample_initial: band " + std::to_string(law.band) +
                           " not resolvable on the grid");
    if (law.s0 <= spec.dim / 2.0)
        throw config_error("sample_initial: s0 must exceed d/2 for point evaluation");
    SampleStats local;
    std::vector<TorusField> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Rng rng = Rng::substream(law.seed, static_cast<std::uint64_t>(i));
        for (;;) {
            ++local.draws;
            TorusField f = draw_field(law, spec, rng);
            if (sobolev_norm(f, law.s0) <= law.r0 && sup_norm(f) <= law.sup_bound) {
                ++local.accepted;
                out.push_back(std::move(f));
                break;
            }
            if (local.draws >= 10000 && local.acceptance_rate() < 1e-3)
                throw config_error(
                    "sample_initial: acceptance rate below 1e-3 after 10^4 draws; "
                    "the law is misconfigured for the ball (r0 = " +
                    std::to_string(law.r0) + ", sup bound = " + std::to_string(law.sup_bound) + ")");
        }
    }
    if (stats) *stats = local;
    return out;
}

SensorSet SensorSet::equispaced(const GridSpec& spec, int m) {
    if (m < 2) throw config_error("SensorSet: need at least 2 sensors per axis direction");
    int per_axis = m;
    if (spec.dim == 2) {
        const int p = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
        if (p * p != m)
            throw config_error("SensorSet: d=2 requires a square sensor count, got " +
                               std::to_string(m));
        per_axis = p;
    } else if (spec.dim != 1) {
        throw config_error("SensorSet: equispaced sensors support d in {1,2}");
    }
    if (per_axis < 2 || per_axis % 2 != 0 || spec.points_per_axis % per_axis != 0)
        throw config_error("SensorSet: per-axis sensor count " + std::to_string(per_axis) +
                           " must be even and divide points_per_axis = " +
                           std::to_string(spec.points_per_axis));
    const std::size_t stride = static_cast<std::size_t>(spec.points_per_axis / per_axis);
    SensorSet s;
    s.per_axis = per_axis;
    if (spec.dim == 1) {
        for (int k = 0; k < per_axis; ++k) s.flat_indices.push_back(stride * static_cast<std::size_t>(k));
    } else {
        for (int a = 0; a < per_axis; ++a)
            for (int b = 0; b < per_axis; ++b)
                s.flat_indices.push_back(stride * static_cast<std::size_t>(a) *
                                             static_cast<std::size_t>(spec.points_per_axis) +
                                         stride * static_cast<std::size_t>(b));
    }
    return s;
}

Observation observe(const SensorSet& sensors, const TorusField& u0) {
    Observation obs;
    obs.readings.reserve(sensors.count());
    for (std::size_t flat : sensors.flat_indices) {
        if (flat >= u0.values().size()) throw config_error("observe: sensor location off the grid");
        obs.readings.push_back(u0.values()[flat]);
    }
    return obs;
}

TorusField reconstruct(const SensorSet& sensors, const Observation& obs, const GridSpec& spec,
                       double s0, double r0) {
    if (obs.readings.size() != sensors.count())
        throw config_error("reconstruct: readings/sensor count mismatch");
    if (sensors.per_axis < 2) throw config_error("reconstruct: need >= 2 sensors per axis");
    const int p = sensors.per_axis;
    // coarse DFT on the sensor grid
    GridSpec coarse(spec.dim, p, 2);
    const TorusField coarse_field = TorusField::from_values(coarse, obs.readings);
    const auto& cs = coarse_field.spectrum();
    // zero-pad onto the fine grid, splitting each axis Nyquist mode evenly
    const int m = spec.points_per_axis;
    std::vector<std::complex<double>> fine(spec.space_size(), {0.0, 0.0});
    const std::size_t n_coarse = coarse.space_size();
    for (std::size_t flat = 0; flat < n_coarse; ++flat) {
        const auto freq = coarse.freq_vector(flat);
        // enumerate the +-Nyquist expansions of this coarse mode
        std::vector<std::vector<int>> targets{{}};
        double weight = 1.0;
        for (int f : freq) {
            std::vector<std::vector<int>> next;
            if (f == p / 2 || f == -p / 2) {
                weight *= 0.5;
                for (auto& t : targets) {
                    auto t1 = t, t2 = t;
                    t1.push_back(p / 2);
                    t2.push_back(-p / 2);
                    next.push_back(std::move(t1));
                    next.push_back(std::move(t2));
                }
            } else {
                for (auto& t : targets) {
                    auto t1 = t;
                    t1.push_back(f);
                    next.push_back(std::move(t1));
                }
            }
            targets = std::move(next);
        }
        for (const auto& t : targets) {
            std::size_t out_flat = 0;
            for (int f : t)
                out_flat = out_flat * static_cast<std::size_t>(m) +
                           static_cast<std::size_t>((f % m + m) % m);
            fine[out_flat] += weight * cs[flat];
        }
    }
    TorusField rec = TorusField::from_spectrum(spec, std::move(fine));
    const double norm = sobolev_norm(rec, s0);
    if (norm > r0 * (1.0 + 1e-12)) {
        std::vector<std::complex<double>> scaled(rec.spectrum());
        const double factor = r0 / norm;
        for (auto& c : scaled) c *= factor;
        rec = TorusField::from_spectrum(spec, std::move(scaled));
    }
    return rec;
}

double reconstruction_error(const InitialLaw& law, const SensorSet& sensors, const GridSpec& spec,
                            int n_mc) {
    if (n_mc < 1) throw config_error("reconstruction_error: n_mc must be >= 1");
    const auto samples = sample_initial(law, spec, n_mc);
    double acc = 0.0;
    for (const auto& u0 : samples) {
        const TorusField rec = reconstruct(sensors, observe(sensors, u0), spec, law.s0, law.r0);
        const double e = sup_norm(sub(rec, u0));
        acc += e * e;
    }
    return acc / static_cast<double>(n_mc);
}

} // namespace picardop
