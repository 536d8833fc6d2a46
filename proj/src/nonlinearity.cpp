#include "picardop/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "picardop/errors.hpp"
#include "picardop/spectral.hpp"

namespace picardop {

PiecewiseLinear::PiecewiseLinear(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    if (knots_.size() < 2 || knots_.size() != values_.size())
        throw config_error("PiecewiseLinear: need >= 2 knots and matching values");
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (!(knots_[i] > knots_[i - 1]))
            throw config_error("PiecewiseLinear: knots must be strictly increasing");
    const auto z = std::lower_bound(knots_.begin(), knots_.end(), 0.0);
    if (z == knots_.end() || *z != 0.0)
        throw config_error("PiecewiseLinear: knots must contain 0");
    if (values_[static_cast<std::size_t>(z - knots_.begin())] != 0.0)
        throw config_error("PiecewiseLinear: value at knot 0 must be exactly 0");
}

double PiecewiseLinear::operator()(double x) const {
    x = std::clamp(x, knots_.front(), knots_.back());
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    const std::size_t hi = std::min<std::size_t>(
        std::max<std::size_t>(static_cast<std::size_t>(it - knots_.begin()), 1), knots_.size() - 1);
    const std::size_t lo = hi - 1;
    const double w = (x - knots_[lo]) / (knots_[hi] - knots_[lo]);
    return values_[lo] + w * (values_[hi] - values_[lo]);
}

double PiecewiseLinear::max_secant_slope() const {
    double s = 0.0;
    for (std::size_t i = 1; i < knots_.size(); ++i)
        s = std::max(s, std::abs(values_[i] - values_[i - 1]) / (knots_[i] - knots_[i - 1]));
    return s;
}

Nonlinearity PiecewiseLinear::as_nonlinearity(double lipschitz_cert, std::string tag) const {
    auto table = std::make_shared<PiecewiseLinear>(*this);
    Nonlinearity F;
    F.eval = [table](double x) { return (*table)(x); };
    F.lipschitz_cert = lipschitz_cert;
    F.domain = std::max(std::abs(knots_.front()), std::abs(knots_.back()));
    F.zero_at_zero = true;
    F.tag = std::move(tag);
    return F;
}

std::vector<std::string> catalog_names() {
    return {"zero", "linear", "sin", "tanh", "exp_minus_one", "allen_cahn", "power", "defocusing"};
}

Nonlinearity catalog(const std::string& name, const CatalogParams& params, double M) {
    if (M <= 0.0) throw admissibility_error("catalog: M must be positive");
    Nonlinearity F;
    F.domain = M;
    F.zero_at_zero = true;
    F.tag = name;
    const double a = params.amplitude;
    if (name == "zero") {
        F.eval = [](double) { return 0.0; };
        F.lipschitz_cert = 0.0;
    } else if (name == "linear") {
        F.eval = [a](double u) { return a * u; };
        F.lipschitz_cert = std::abs(a);
    } else if (name == "sin") {
        F.eval = [a](double u) { return a * std::sin(u); };
        F.lipschitz_cert = std::abs(a); // |cos| <= 1, attained at 0
    } else if (name == "tanh") {
        F.eval = [a](double u) { return a * std::tanh(u); };
        F.lipschitz_cert = std::abs(a);
    } else if (name == "exp_minus_one") {
        F.eval = [a](double u) { return a * (std::exp(u) - 1.0); };
        F.lipschitz_cert = std::abs(a) * std::exp(M);
    } else if (name == "allen_cahn") {
        F.eval = [a](double u) { return a * (u - u * u * u); };
        // max |1 - 3u^2| on [-M,M]: 1 at u=0, 3M^2-1 at the ends
        F.lipschitz_cert = std::abs(a) * std::max(1.0, 3.0 * M * M - 1.0);
    } else if (name == "power") {
        const double lam = params.lambda, p = params.p;
        if (p < 1.0) throw admissibility_error("catalog power: p must be >= 1");
        F.eval = [lam, p](double u) { return lam * std::pow(std::abs(u), p - 1.0) * u; };
        F.lipschitz_cert = std::abs(lam) * p * std::pow(M, p - 1.0);
        F.tag = name;
    } else if (name == "defocusing") {
        const double al = params.alpha, be = params.beta, p = params.p;
        if (al < 0.0 || be < 0.0 || p < 1.0)
            throw admissibility_error("catalog defocusing: need alpha, beta >= 0 and p >= 1");
        F.eval = [al, be, p](double u) { return -al * u - be * std::pow(std::abs(u), p - 1.0) * u; };
        F.lipschitz_cert = al + be * p * std::pow(M, p - 1.0);
    } else {
        throw admissibility_error("catalog: unknown nonlinearity '" + name + "'");
    }
    return F;
}

void require_admissible(const Nonlinearity& F, double M, double L) {
    if (!F.zero_at_zero || F.eval(0.0) != 0.0)
        throw admissibility_error("nonlinearity '" + F.tag + "': F(0) must be exactly 0");
    if (F.domain + 1e-12 < M)
        throw admissibility_error("nonlinearity '" + F.tag + "': certified domain smaller than M");
    if (F.lipschitz_cert > L * (1.0 + 1e-9))
        throw admissibility_error("nonlinearity '" + F.tag + "': Lipschitz certificate " +
                                  std::to_string(F.lipschitz_cert) + " exceeds class bound " +
                                  std::to_string(L));
}

double certify_lipschitz(const Nonlinearity& F, double M, int samples) {
    double worst = 0.0;
    double prev_x = -M, prev_v = F.eval(-M);
    for (int i = 1; i <= samples; ++i) {
        const double x = -M + 2.0 * M * static_cast<double>(i) / static_cast<double>(samples);
        const double v = F.eval(x);
        worst = std::max(worst, std::abs(v - prev_v) / (x - prev_x));
        prev_x = x;
        prev_v = v;
    }
    return worst;
}

PiecewiseLinear build_rho(const Nonlinearity& F, double M, double L, double eta) {
    if (!(eta > 0.0) || eta >= 1.0) throw config_error("build_rho: eta must lie in (0,1)");
    require_admissible(F, M, L);
    if (F.lipschitz_cert == 0.0) {
        const double probe = std::max(std::abs(F.eval(0.37 * M)), std::abs(F.eval(-0.73 * M)));
        if (probe > 0.0)
            throw admissibility_error("build_rho: L certificate is 0 but F is not identically 0");
    }

    const double h_target =
        F.lipschitz_cert > 0.0 ? std::min(eta / F.lipschitz_cert, M / 2.0) : M / 2.0;
    const int n_half = static_cast<int>(std::ceil(M / h_target));
    std::vector<double> knots, values;
    knots.reserve(static_cast<std::size_t>(2 * n_half + 1));
    for (int k = -n_half; k <= n_half; ++k) {
        const double x = M * static_cast<double>(k) / static_cast<double>(n_half);
        knots.push_back(x);
        values.push_back(k == 0 ? 0.0 : F.eval(x));
    }
    PiecewiseLinear rho(std::move(knots), std::move(values));

    // certify on a 10x finer grid
    double sup_err = 0.0;
    const int fine = 10 * (2 * n_half) + 1;
    for (int i = 0; i < fine; ++i) {
        const double x = -M + 2.0 * M * static_cast<double>(i) / static_cast<double>(fine - 1);
        sup_err = std::max(sup_err, std::abs(F.eval(x) - rho(x)));
    }
    if (sup_err > eta * (1.0 + 1e-9))
        throw admissibility_error("build_rho: certification failed, sup error " +
                                  std::to_string(sup_err) + " > eta " + std::to_string(eta) +
                                  " (Lipschitz certificate of '" + F.tag + "' is inconsistent)");
    return rho;
}

namespace {

template <class Eval>
TrajectoryField apply_map(const TrajectoryField& u, double domain, const Eval& f) {
    constexpr double kSlack = 1e-8;
    std::vector<TorusField> out;
    out.reserve(u.slices().size());
    for (std::size_t j = 0; j < u.slices().size(); ++j) {
        const auto& s = u.slices()[j];
        const double sn = sup_norm(s);
        if (sn > domain + kSlack)
            throw std::domain_error("apply_pointwise: slice " + std::to_string(j) + " has sup norm " +
                                    std::to_string(sn) + " outside the certified interval [-" +
                                    std::to_string(domain) + "," + std::to_string(domain) + "]");
        std::vector<double> v(s.values());
        for (double& x : v) x = f(std::clamp(x, -domain, domain));
        out.push_back(TorusField::from_values(u.spec(), std::move(v)));
    }
    return TrajectoryField(u.spec(), std::move(out), u.horizon());
}

} // namespace

TrajectoryField apply_pointwise(const Nonlinearity& F, const TrajectoryField& u) {
    return apply_map(u, F.domain, [&](double x) { return F.eval(x); });
}

TrajectoryField apply_pointwise(const PiecewiseLinear& rho, const TrajectoryField& u, double domain) {
    return apply_map(u, domain, [&](double x) { return rho(x); });
}

bool certify_defocusing(const Nonlinearity& F, double M, int samples) {
    for (int i = 0; i <= samples; ++i) {
        const double a = -M + 2.0 * M * static_cast<double>(i) / static_cast<double>(samples);
        if (a * F.eval(a) > 1e-14) return false;
    }
    return true;
}

bool certify_dissipative(const Nonlinearity& F, double M, double lambda, int samples) {
    for (int i = 0; i <= samples; ++i) {
        const double a = -M + 2.0 * M * static_cast<double>(i) / static_cast<double>(samples);
        for (int j = 0; j < i; ++j) {
            const double b = -M + 2.0 * M * static_cast<double>(j) / static_cast<double>(samples);
            const double d = a - b;
            if ((F.eval(a) - F.eval(b)) * d > -lambda * d * d + 1e-12) return false;
        }
    }
    return true;
}

} // namespace picardop
