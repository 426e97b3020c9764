#include "smoothavg/kernel.hpp"

#include "smoothavg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smoothavg {

namespace {

double half_sum(std::span<const double> half) {
    double s = half[0];
    for (std::size_t k = 1; k < half.size(); ++k) s += 2.0 * half[k];
    return s;
}

}  // namespace

DiscreteKernel DiscreteKernel::from_half(std::vector<double> half, const KernelOptions& opts) {
    if (half.empty()) throw std::invalid_argument("kernel needs at least u(0)");
    for (double v : half) {
        if (!std::isfinite(v)) throw std::invalid_argument("kernel weights must be finite");
    }
    const double s = half_sum(half);
    if (std::abs(s - 1.0) > opts.tol) {
        if (!opts.renormalize || s == 0.0) throw NotNormalized(s);
        for (auto& v : half) v /= s;
    }
    return DiscreteKernel(std::move(half));
}

DiscreteKernel DiscreteKernel::from_full(std::span<const double> values, const KernelOptions& opts) {
    if (values.size() % 2 == 0) throw std::invalid_argument("full kernel must have odd length 2n+1");
    const std::size_t n = values.size() / 2;
    double worst = 0.0;
    std::size_t worst_k = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double d = std::abs(values[n + k] - values[n - k]);
        if (d > worst) {
            worst = d;
            worst_k = k;
        }
    }
    if (worst > opts.tol && !opts.symmetrize) throw AsymmetricKernel(worst, worst_k);
    std::vector<double> half(n + 1);
    half[0] = values[n];
    for (std::size_t k = 1; k <= n; ++k) half[k] = 0.5 * (values[n + k] + values[n - k]);
    return from_half(std::move(half), opts);
}

double DiscreteKernel::operator()(long k) const noexcept {
    const auto a = static_cast<std::size_t>(k < 0 ? -k : k);
    return a < half_.size() ? half_[a] : 0.0;
}

std::vector<double> DiscreteKernel::full() const {
    const long n = radius();
    std::vector<double> out(static_cast<std::size_t>(2 * n + 1));
    for (long k = -n; k <= n; ++k) out[static_cast<std::size_t>(k + n)] = (*this)(k);
    return out;
}

double DiscreteKernel::sum() const noexcept { return half_sum(half_); }

DiscreteKernel identity_kernel() { return DiscreteKernel::from_half({1.0}); }

DiscreteKernel box_kernel(int n) {
    if (n < 0) throw std::invalid_argument("box_kernel: n must be nonnegative");
    return DiscreteKernel::from_half(std::vector<double>(static_cast<std::size_t>(n) + 1, 1.0 / (2.0 * n + 1.0)));
}

DiscreteKernel triangle_kernel(int n) {
    if (n < 0) throw std::invalid_argument("triangle_kernel: n must be nonnegative");
    const double m = n + 1.0;
    std::vector<double> half(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) half[static_cast<std::size_t>(k)] = (m - k) / (m * m);
    return DiscreteKernel::from_half(std::move(half));
}

ChebPoly symbol(const DiscreteKernel& u) {
    const auto half = u.half();
    std::vector<double> c(half.begin(), half.end());
    for (std::size_t k = 1; k < c.size(); ++k) c[k] *= 2.0;
    return ChebPoly(std::move(c));
}

DiscreteKernel kernel_from_symbol(const ChebPoly& p, int min_radius) {
    const double at_one = p(1.0);
    if (std::abs(at_one - 1.0) > 1e-9) throw NotNormalizedSymbol(at_one);
    const int n = std::max(p.degree(), min_radius);
    std::vector<double> half(static_cast<std::size_t>(n) + 1, 0.0);
    half[0] = p[0];
    for (int k = 1; k <= p.degree(); ++k) half[static_cast<std::size_t>(k)] = 0.5 * p[k];
    return DiscreteKernel::from_half(std::move(half), {.tol = 1e-9});
}

double fourier_symbol(const DiscreteKernel& u, double xi) { return symbol(u)(std::cos(xi)); }

NonnegCheck has_nonneg_fourier(const DiscreteKernel& u, double tol) {
    const Extremum lo = min_value(symbol(u));
    if (lo.value >= -tol) return {true, lo.value, std::nullopt};
    return {false, lo.value, lo.x};
}

double max_abs_difference(const DiscreteKernel& u, const DiscreteKernel& v) {
    const long n = std::max(u.radius(), v.radius());
    double worst = 0.0;
    for (long k = 0; k <= n; ++k) worst = std::max(worst, std::abs(u(k) - v(k)));
    return worst;
}

template <class T>
BasicSequence<T> convolve(const BasicSequence<T>& f, const DiscreteKernel& u) {
    const long n = u.radius();
    if (f.values.empty()) return {f.offset, {}};
    BasicSequence<T> out{f.offset - n, std::vector<T>(f.values.size() + static_cast<std::size_t>(2 * n), T{})};
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        for (long k = -n; k <= n; ++k) {
            out.values[static_cast<std::size_t>(static_cast<long>(i) + k + n)] += f.values[i] * u(k);
        }
    }
    return out;
}

template <class T>
BasicSequence<T> apply_stencil(const BasicSequence<T>& f, const Stencil& s) {
    if (f.values.empty() || s.taps.empty()) return {f.offset, {}};
    const long width = static_cast<long>(s.taps.size());
    const long lo = f.first() - s.offset - (width - 1);
    const long hi = f.last() - s.offset;
    BasicSequence<T> out{lo, std::vector<T>(static_cast<std::size_t>(hi - lo + 1), T{})};
    for (long k = lo; k <= hi; ++k) {
        T acc{};
        for (long j = 0; j < width; ++j) acc += s.taps[static_cast<std::size_t>(j)] * f.at(k + s.offset + j);
        out.values[static_cast<std::size_t>(k - lo)] = acc;
    }
    return out;
}

template <class T>
double l2_norm(const BasicSequence<T>& f) {
    double s = 0.0;
    for (const auto& v : f.values) s += std::norm(v);
    return std::sqrt(s);
}

template Sequence convolve(const Sequence&, const DiscreteKernel&);
template ComplexSequence convolve(const ComplexSequence&, const DiscreteKernel&);
template Sequence apply_stencil(const Sequence&, const Stencil&);
template ComplexSequence apply_stencil(const ComplexSequence&, const Stencil&);
template double l2_norm(const Sequence&);
template double l2_norm(const ComplexSequence&);

}  // namespace smoothavg
