#pragma once

#include "smoothavg/chebyshev.hpp"
#include "smoothavg/continuum.hpp"
#include "smoothavg/kernel.hpp"

#include <random>

namespace smoothavg {

using Rng = std::mt19937_64;

/// Symmetric normalized kernel of radius n with weights drawn from U(-1/4, 1)
/// before normalization (redrawn while the raw sum is below 0.1).
[[nodiscard]] DiscreteKernel random_kernel(int n, Rng& rng);

/// u(k) = sum_j a_j a_{j+|k|} / (sum a)^2 for a_0..a_n drawn from U(-1/2, 1),
/// so that u^ = |a^|^2 / (sum a)^2 >= 0.
[[nodiscard]] DiscreteKernel random_nonneg_kernel(int n, Rng& rng);

/// 2^{1-n} T_n plus a random combination of T_0..T_{n-1} with coefficients
/// of size up to scale * 2^{1-n}. Still monic.
[[nodiscard]] ChebPoly random_monic_perturbation(int n, Rng& rng, double scale = 0.1);

/// g * g for g(y) = sum_{p=1}^4 a_p (1 - 4y^2)^p on [-1/2, 1/2], a_p from U(0, 1).
/// Even, supported in [-1, 1], with nonnegative Fourier transform.
[[nodiscard]] PerturbationFunction random_bump_autoconvolution(Rng& rng);

}  // namespace smoothavg
