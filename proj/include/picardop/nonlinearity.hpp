#pragma once

#include <functional>
#include <string>
#include <vector>

#include "picardop/grid.hpp"

namespace picardop {

/// Scalar nonlinearity on [-M,M] with F(0)=0 and a certified Lipschitz bound.
struct Nonlinearity {
    std::function<double(double)> eval;
    double lipschitz_cert = 0.0; // certified bound on [-domain, domain]
    double domain = 1.0;         // M, half-width of the certified interval
    bool zero_at_zero = true;
    std::string tag;
};

/// Continuous piecewise-affine map on [-M,M]: strictly increasing knots
/// covering the interval and containing 0, value 0 at knot 0, every secant
/// slope bounded by the class constant. Queries are clamped to [-M,M].
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<double> knots, std::vector<double> values);

    double operator()(double x) const;
    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t knot_count() const { return knots_.size(); }
    double max_secant_slope() const;

    /// Wrap as a Nonlinearity (shares the table).
    Nonlinearity as_nonlinearity(double lipschitz_cert, std::string tag) const;

private:
    std::vector<double> knots_;
    std::vector<double> values_;
};

/// Catalog parameters; which fields are read depends on the name.
struct CatalogParams {
    double amplitude = 1.0; // a (linear/sin/tanh/exp_minus_one/allen_cahn)
    double lambda = 1.0;    // power
    double p = 3.0;         // power / defocusing exponent, >= 1
    double alpha = 1.0;     // defocusing linear coefficient, >= 0
    double beta = 0.0;      // defocusing power coefficient, >= 0
};

/// Named admissible nonlinearities with analytically derived Lipschitz
/// certificates on [-M,M]. Names: zero, linear, sin, tanh, exp_minus_one,
/// allen_cahn, power, defocusing.
Nonlinearity catalog(const std::string& name, const CatalogParams& params, double M);
std::vector<std::string> catalog_names();

/// Throws admissibility_error if F violates the class (Lip > L or F(0) != 0).
void require_admissible(const Nonlinearity& F, double M, double L);

/// Max sampled secant slope of F over a dense grid on [-M,M].
double certify_lipschitz(const Nonlinearity& F, double M, int samples = 10000);

/// Piecewise-affine interpolant of F on uniform knots with mesh
/// h = min(eta/L, M/2), knots always containing {-M, 0, M}. Guarantees
/// rho(0)=0 exactly, sup-error <= eta (certified on a 10x finer grid),
/// secant slopes <= L, and knot count <= ceil(2*M*L/eta)+3.
PiecewiseLinear build_rho(const Nonlinearity& F, double M, double L, double eta);

/// Grid-pointwise application. Requires sup_norm(u) <= F.domain + 1e-8;
/// throws std::domain_error naming the offending slice otherwise.
TrajectoryField apply_pointwise(const Nonlinearity& F, const TrajectoryField& u);
TrajectoryField apply_pointwise(const PiecewiseLinear& rho, const TrajectoryField& u, double domain);

/// a*F(a) <= 0 on a dense grid (defocusing certification).
bool certify_defocusing(const Nonlinearity& F, double M, int samples = 10000);

/// (F(a)-F(b))(a-b) <= -lambda (a-b)^2 on a dense grid (strict dissipativity).
bool certify_dissipative(const Nonlinearity& F, double M, double lambda, int samples = 500);

} // namespace picardop
