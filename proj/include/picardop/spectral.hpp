#pragma once

#include <complex>
#include <span>
#include <vector>

#include "picardop/grid.hpp"

namespace picardop {

/// Forward transform, mean convention (see TorusField). Throws numeric_error
/// on non-finite input.
std::vector<std::complex<double>> to_spectrum(const TorusField& f);

/// Tensor-product Fejer weight prod_r (1 - |xi_r|/(N+1))_+ in [0,1];
/// zero outside the cube |xi_r| <= N.
double fejer_mask(int rank, std::span<const int> xi);

/// Fejer projection P_N: multiply the spectrum by the Fejer mask.
/// L-infinity contractive. Throws config_error if the grid does not resolve N.
TorusField apply_fejer(const TorusField& f, int rank);

/// (sum_xi (1+|xi|^2)^s |u_hat(xi)|^2)^{1/2}; at s=0 this is the discrete
/// (mean-normalized) L2 norm.
double sobolev_norm(const TorusField& f, double s);

/// Grid-max norm, the discrete proxy for L-infinity.
double sup_norm(const TorusField& f);
double sup_norm(const TrajectoryField& u);

namespace detail {
// FFTW-backed c2c transforms on the flattened row-major array. Forward
// applies the 1/m^d mean normalization; inverse does not rescale.
std::vector<std::complex<double>> dft_forward(const GridSpec& spec, const std::vector<double>& values);
std::vector<double> dft_inverse_real(const GridSpec& spec, const std::vector<std::complex<double>>& spectrum);
} // namespace detail

} // namespace picardop
