#include "picardop/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "picardop/errors.hpp"

namespace picardop {
namespace detail {

namespace {

// Plans are cached per (dims, direction) and reused via new-array execution.
// FFTW_UNALIGNED makes plans valid for any buffer; plan creation is serialized
// (only fftw_execute* is thread-safe), execution is not.
class PlanCache {
public:
    fftw_plan get(const std::vector<int>& dims, int sign) {
        const std::pair<std::vector<int>, int> key{dims, sign};
        std::lock_guard<std::mutex> lock(mu_);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::size_t n = 1;
        for (int d : dims) n *= static_cast<std::size_t>(d);
        std::vector<std::complex<double>> a(n), b(n);
        fftw_plan plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(),
                                       reinterpret_cast<fftw_complex*>(a.data()),
                                       reinterpret_cast<fftw_complex*>(b.data()), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED | FFTW_PRESERVE_INPUT);
        if (plan == nullptr) throw config_error("FFTW plan creation failed");
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mu_;
    std::map<std::pair<std::vector<int>, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

std::vector<std::complex<double>> dft_c2c(const GridSpec& spec,
                                          std::vector<std::complex<double>> in, int sign) {
    std::vector<int> dims(static_cast<std::size_t>(spec.dim), spec.points_per_axis);
    fftw_plan plan = plan_cache().get(dims, sign);
    std::vector<std::complex<double>> out(in.size());
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

} // namespace

std::vector<std::complex<double>> dft_forward(const GridSpec& spec, const std::vector<double>& values) {
    std::vector<std::complex<double>> in(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) in[i] = {values[i], 0.0};
    auto out = dft_c2c(spec, std::move(in), FFTW_FORWARD);
    const double norm = 1.0 / static_cast<double>(spec.space_size());
    for (auto& c : out) c *= norm;
    return out;
}

std::vector<double> dft_inverse_real(const GridSpec& spec,
                                     const std::vector<std::complex<double>>& spectrum) {
    auto out = dft_c2c(spec, spectrum, FFTW_BACKWARD);
    std::vector<double> values(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) values[i] = out[i].real();
    return values;
}

} // namespace detail

std::vector<std::complex<double>> to_spectrum(const TorusField& f) { return f.spectrum(); }

double fejer_mask(int rank, std::span<const int> xi) {
    double w = 1.0;
    for (int c : xi) {
        const double factor = 1.0 - std::abs(static_cast<double>(c)) / (rank + 1.0);
        if (factor <= 0.0) return 0.0;
        w *= factor;
    }
    return w;
}

TorusField apply_fejer(const TorusField& f, int rank) {
    const GridSpec& spec = f.spec();
    if (!spec.resolves_rank(rank))
        throw config_error("apply_fejer: rank " + std::to_string(rank) +
                           " not resolvable on grid with points_per_axis " +
                           std::to_string(spec.points_per_axis));
    std::vector<std::complex<double>> s(f.spectrum());
    for (std::size_t flat = 0; flat < s.size(); ++flat) {
        const auto freq = spec.freq_vector(flat);
        s[flat] *= fejer_mask(rank, freq);
    }
    return TorusField::from_spectrum(spec, std::move(s));
}

double sobolev_norm(const TorusField& f, double s) {
    if (s < 0.0) throw config_error("sobolev_norm: order must be >= 0");
    const GridSpec& spec = f.spec();
    double acc = 0.0;
    const auto& spectrum = f.spectrum();
    for (std::size_t flat = 0; flat < spectrum.size(); ++flat) {
        const double w = std::pow(1.0 + spec.freq_sq(flat), s);
        acc += w * std::norm(spectrum[flat]);
    }
    return std::sqrt(acc);
}

double sup_norm(const TorusField& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

double sup_norm(const TrajectoryField& u) {
    double m = 0.0;
    for (const auto& s : u.slices()) m = std::max(m, sup_norm(s));
    return m;
}

} // namespace picardop
