#include "smoothavg/sampling.hpp"

#include <array>
#include <cmath>

namespace smoothavg {

DiscreteKernel random_kernel(int n, Rng& rng) {
    std::uniform_real_distribution<double> dist(-0.25, 1.0);
    std::vector<double> half(static_cast<std::size_t>(n) + 1);
    for (;;) {
        double sum = 0.0;
        for (std::size_t k = 0; k < half.size(); ++k) {
            half[k] = dist(rng);
            sum += (k == 0 ? 1.0 : 2.0) * half[k];
        }
        if (sum < 0.1) continue;
        for (double& v : half) v /= sum;
        return DiscreteKernel::from_half(std::move(half), {.tol = 1e-12, .symmetrize = false, .renormalize = true});
    }
}

DiscreteKernel random_nonneg_kernel(int n, Rng& rng) {
    std::uniform_real_distribution<double> dist(-0.5, 1.0);
    std::vector<double> a(static_cast<std::size_t>(n) + 1);
    for (;;) {
        double s = 0.0;
        for (double& v : a) {
            v = dist(rng);
            s += v;
        }
        if (std::abs(s) < 0.1) continue;
        std::vector<double> half(a.size(), 0.0);
        for (std::size_t k = 0; k < a.size(); ++k) {
            for (std::size_t j = 0; j + k < a.size(); ++j) half[k] += a[j] * a[j + k];
            half[k] /= s * s;
        }
        return DiscreteKernel::from_half(std::move(half), {.tol = 1e-12, .symmetrize = false, .renormalize = true});
    }
}

ChebPoly random_monic_perturbation(int n, Rng& rng, double scale) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const double lead = std::ldexp(1.0, 1 - n);
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[static_cast<std::size_t>(n)] = lead;
    for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = scale * lead * dist(rng);
    return ChebPoly(std::move(c));
}

PerturbationFunction random_bump_autoconvolution(Rng& rng) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::array<double, 4> a{};
    for (double& v : a) v = dist(rng);
    return PerturbationFunction::autoconvolution([a](double y) {
        const double b = 1.0 - 4.0 * y * y;
        double s = 0.0;
        double pw = 1.0;
        for (double coef : a) {
            pw *= b;
            s += coef * pw;
        }
        return s;
    });
}

}  // namespace smoothavg
