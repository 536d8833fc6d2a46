#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "picardop/errors.hpp"
#include "picardop/semigroup.hpp"
#include "picardop/spectral.hpp"
#include "test_util.hpp"

using namespace picardop;
using namespace picardop::testutil;

TEST_CASE("heat multiplier values") {
    const std::vector<int> xi0{0};
    const std::vector<int> xi2{2};
    CHECK(heat_multiplier(xi2, 0.0) == 1.0);
    CHECK(heat_multiplier(xi0, 3.7) == 1.0);
    CHECK(heat_multiplier(xi2, 0.1) == doctest::Approx(std::exp(-0.4)).epsilon(1e-15));
    CHECK(heat_multiplier(xi2, 0.1) == doctest::Approx(0.670320046036).epsilon(1e-12));
    CHECK_THROWS_AS(heat_multiplier(xi2, -0.1), std::domain_error);
}

TEST_CASE("apply_semigroup: identity at t=0, constants preserved, single-mode decay") {
    const GridSpec spec(1, 32, 2);
    Rng rng(2);
    const TorusField f = smooth_field(spec, 8, rng);
    const TorusField id = apply_semigroup(SemigroupKind::exact(), f, 0.0);
    CHECK(sup_norm(sub(id, f)) < 1e-14);

    for (const auto kind : {SemigroupKind::exact(), SemigroupKind::truncated(8)}) {
        const TorusField c = apply_semigroup(kind, TorusField::constant(spec, 0.9), 0.3);
        for (double v : c.values()) CHECK(v == doctest::Approx(0.9).epsilon(1e-14));
    }

    // closed-form heat solution for cos(x): e^{-t} cos(x)
    std::vector<double> v(32);
    for (int k = 0; k < 32; ++k) v[static_cast<std::size_t>(k)] = std::cos(spec.coordinate(k));
    const TorusField cosf = TorusField::from_values(spec, v);
    const TorusField flowed = apply_semigroup(SemigroupKind::exact(), cosf, 0.5);
    for (int k = 0; k < 32; ++k)
        CHECK(flowed.values()[static_cast<std::size_t>(k)] ==
              doctest::Approx(std::exp(-0.5) * std::cos(spec.coordinate(k))).epsilon(1e-13));
}

TEST_CASE("semigroup composition property (exact kind)") {
    const GridSpec spec(1, 64, 2);
    Rng rng(4);
    for (int rep = 0; rep < 50; ++rep) {
        const TorusField f = smooth_field(spec, 16, rng);
        const double t1 = 0.3 * rng.uniform(), t2 = 0.3 * rng.uniform();
        const TorusField a = apply_semigroup(SemigroupKind::exact(), f, t1 + t2);
        const TorusField b = apply_semigroup(
            SemigroupKind::exact(), apply_semigroup(SemigroupKind::exact(), f, t1), t2);
        CHECK(sup_norm(sub(a, b)) < 1e-12);
    }
}

TEST_CASE("L-infinity contractivity on 1000 smooth fields, both kinds") {
    const GridSpec spec(1, 64, 2);
    Rng rng(6);
    for (int rep = 0; rep < 1000; ++rep) {
        const TorusField f = smooth_field(spec, 16, rng);
        const double t = 0.5 * rng.uniform();
        CHECK(sup_norm(apply_semigroup(SemigroupKind::exact(), f, t)) <= sup_norm(f) + 1e-12);
        CHECK(sup_norm(apply_semigroup(SemigroupKind::truncated(16), f, t)) <=
              sup_norm(f) + 1e-12);
    }
}

TEST_CASE("duhamel on zero and constant sources") {
    const GridSpec spec(1, 16, 33);
    const double T = 0.5;
    const TrajectoryField zero = TrajectoryField::zero(spec, T);
    CHECK(sup_norm(duhamel(SemigroupKind::exact(), zero)) == 0.0);

    // g constant in space-time: zero mode integrates exactly to c*t
    std::vector<TorusField> slices(33, TorusField::constant(spec, 0.8));
    const TrajectoryField g(spec, std::move(slices), T);
    const TrajectoryField k = duhamel(SemigroupKind::exact(), g);
    for (int j = 0; j < 33; ++j) {
        const double t = g.time_at(j);
        CHECK(k.slice(j).spectrum()[0].real() == doctest::Approx(0.8 * t).epsilon(1e-13));
    }
}

TEST_CASE("duhamel closed form for a time-constant mode: (1-e^{-lambda t})/lambda") {
    const GridSpec spec(1, 16, 65);
    const double T = 0.5;
    std::vector<double> v(16);
    for (int kk = 0; kk < 16; ++kk) v[static_cast<std::size_t>(kk)] = std::cos(2.0 * spec.coordinate(kk));
    std::vector<TorusField> slices(65, TorusField::from_values(spec, v));
    const TrajectoryField g(spec, std::move(slices), T);
    const TrajectoryField k = duhamel(SemigroupKind::exact(), g);
    const double lambda = 4.0; // |xi|^2 for xi = 2
    for (int j : {16, 32, 64}) {
        const double t = g.time_at(j);
        const double factor = (1.0 - std::exp(-lambda * t)) / lambda;
        // mode +2 coefficient of g is 1/2, time-constant
        CHECK(k.slice(j).spectrum()[2].real() == doctest::Approx(0.5 * factor).epsilon(1e-12));
    }
    // spec-pinned value at lambda*t = 2
    CHECK((1.0 - std::exp(-2.0)) / 4.0 == doctest::Approx(0.216166179191).epsilon(1e-11));
}

TEST_CASE("duhamel bound sup <= T sup(g) on random smooth sources") {
    const GridSpec spec(1, 32, 17);
    const double T = 0.5;
    Rng rng(8);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<TorusField> slices;
        for (int j = 0; j < 17; ++j) slices.push_back(smooth_field(spec, 8, rng));
        const TrajectoryField g(spec, std::move(slices), T);
        for (const auto kind : {SemigroupKind::exact(), SemigroupKind::truncated(8)})
            CHECK(sup_norm(duhamel(kind, g)) <= T * sup_norm(g) * (1.0 + 1e-8));
    }
}

TEST_CASE("quadrature is second order against the closed-form mode integral") {
    // g(tau, x) = sin(tau) cos(x); mode +-1 coefficient sin(tau)/2;
    // integral at t: (sin t - cos t + e^{-t})/2 * 1/2
    const double T = 0.5;
    const double exact = (std::sin(T) - std::cos(T) + std::exp(-T)) / 4.0;
    std::vector<double> errs;
    for (int n_t : {9, 17, 33, 65}) {
        const GridSpec spec(1, 16, n_t);
        std::vector<TorusField> slices;
        for (int j = 0; j < n_t; ++j) {
            const double tau = T * j / (n_t - 1);
            std::vector<double> v(16);
            for (int k = 0; k < 16; ++k)
                v[static_cast<std::size_t>(k)] = std::sin(tau) * std::cos(spec.coordinate(k));
            slices.push_back(TorusField::from_values(spec, v));
        }
        const TrajectoryField g(spec, std::move(slices), T);
        const TrajectoryField out = duhamel(SemigroupKind::exact(), g);
        errs.push_back(std::abs(out.slice(n_t - 1).spectrum()[1].real() - exact));
    }
    for (std::size_t i = 1; i < errs.size(); ++i) {
        const double gain = errs[i - 1] / errs[i];
        CHECK(gain > 3.5);
        CHECK(gain < 4.5);
    }
}

TEST_CASE("quadrature weights: series and closed form agree, trapezoid limit at 0") {
    CHECK(detail::phi_a(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(detail::phi_b(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    for (double z : {0.499, 0.4999, 0.49999}) {
        const double closed_a = (1.0 - std::exp(-z) * (1.0 + z)) / (z * z);
        const double closed_b = (z - 1.0 + std::exp(-z)) / (z * z);
        CHECK(detail::phi_a(z) == doctest::Approx(closed_a).epsilon(1e-12));
        CHECK(detail::phi_b(z) == doctest::Approx(closed_b).epsilon(1e-12));
    }
}

TEST_CASE("grid/rank mismatches are configuration errors") {
    const GridSpec spec(1, 16, 5);
    Rng rng(9);
    const TorusField f = rough_field(spec, rng);
    CHECK_THROWS_AS(apply_semigroup(SemigroupKind::truncated(8), f, 0.1), config_error);
    const GridSpec other(1, 32, 5);
    CHECK_THROWS_AS(semigroup_trajectory(SemigroupKind::exact(), f, other, 0.5), config_error);
}
