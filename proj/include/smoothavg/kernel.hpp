#pragma once

#include "smoothavg/chebyshev.hpp"

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace smoothavg {

struct KernelOptions {
    double tol = 1e-12;
    /// Replace v(n+k), v(n-k) by their mean instead of rejecting asymmetric input.
    bool symmetrize = false;
    /// Divide by the weight sum instead of rejecting unnormalized input.
    bool renormalize = false;
};

/// Symmetric averaging kernel u on {-n, ..., n} with sum_k u(k) = 1.
/// Only u(0), ..., u(n) are stored.
class DiscreteKernel {
public:
    static DiscreteKernel from_half(std::vector<double> half, const KernelOptions& opts = {});
    static DiscreteKernel from_full(std::span<const double> values, const KernelOptions& opts = {});

    [[nodiscard]] int radius() const noexcept { return static_cast<int>(half_.size()) - 1; }
    [[nodiscard]] std::span<const double> half() const noexcept { return half_; }
    /// u(k) for any integer k; zero outside the support.
    [[nodiscard]] double operator()(long k) const noexcept;
    /// u(-n), ..., u(n).
    [[nodiscard]] std::vector<double> full() const;
    [[nodiscard]] double sum() const noexcept;

private:
    explicit DiscreteKernel(std::vector<double> half) : half_(std::move(half)) {}
    std::vector<double> half_;
};

[[nodiscard]] DiscreteKernel identity_kernel();
/// u(k) = 1 / (2n+1).
[[nodiscard]] DiscreteKernel box_kernel(int n);
/// u(k) = (n+1-|k|) / (n+1)^2.
[[nodiscard]] DiscreteKernel triangle_kernel(int n);

/// p_u(x) = u(0) + sum_k 2 u(k) T_k(x), so that u^(xi) = p_u(cos xi).
[[nodiscard]] ChebPoly symbol(const DiscreteKernel& u);
/// Inverse of symbol(). Requires |p(1) - 1| <= 1e-9 (NotNormalizedSymbol otherwise).
/// The result has radius max(deg p, min_radius).
[[nodiscard]] DiscreteKernel kernel_from_symbol(const ChebPoly& p, int min_radius = 0);

/// u^(xi) = sum_k u(k) e^{-i k xi}, real by symmetry.
[[nodiscard]] double fourier_symbol(const DiscreteKernel& u, double xi);

struct NonnegCheck {
    bool nonnegative;
    double min_value;
    /// Minimizing x = cos xi of p_u; present when the symbol dips below -tol.
    std::optional<double> witness_x;
};

[[nodiscard]] NonnegCheck has_nonneg_fourier(const DiscreteKernel& u, double tol = 1e-12);

/// max_k |u(k) - v(k)| over the union of supports.
[[nodiscard]] double max_abs_difference(const DiscreteKernel& u, const DiscreteKernel& v);

/// Finitely supported f on {offset, ..., offset + size - 1}.
template <class T>
struct BasicSequence {
    long offset = 0;
    std::vector<T> values;

    [[nodiscard]] T at(long k) const noexcept {
        const long i = k - offset;
        return (i >= 0 && i < static_cast<long>(values.size())) ? values[static_cast<std::size_t>(i)] : T{};
    }
    [[nodiscard]] long first() const noexcept { return offset; }
    [[nodiscard]] long last() const noexcept { return offset + static_cast<long>(values.size()) - 1; }
};

using Sequence = BasicSequence<double>;
using ComplexSequence = BasicSequence<std::complex<double>>;

/// Difference operator (S f)(k) = sum_j taps[j] f(k + offset + j).
struct Stencil {
    std::vector<double> taps;
    long offset = 0;

    static Stencil gradient() { return {{-1.0, 1.0}, 0}; }
    static Stencil laplacian() { return {{1.0, -2.0, 1.0}, 0}; }
};

template <class T>
[[nodiscard]] BasicSequence<T> convolve(const BasicSequence<T>& f, const DiscreteKernel& u);
template <class T>
[[nodiscard]] BasicSequence<T> apply_stencil(const BasicSequence<T>& f, const Stencil& s);
template <class T>
[[nodiscard]] BasicSequence<T> grad(const BasicSequence<T>& f) {
    return apply_stencil(f, Stencil::gradient());
}
template <class T>
[[nodiscard]] BasicSequence<T> laplacian(const BasicSequence<T>& f) {
    return grad(grad(f));
}
template <class T>
[[nodiscard]] double l2_norm(const BasicSequence<T>& f);

extern template Sequence convolve(const Sequence&, const DiscreteKernel&);
extern template ComplexSequence convolve(const ComplexSequence&, const DiscreteKernel&);
extern template Sequence apply_stencil(const Sequence&, const Stencil&);
extern template ComplexSequence apply_stencil(const ComplexSequence&, const Stencil&);
extern template double l2_norm(const Sequence&);
extern template double l2_norm(const ComplexSequence&);

}  // namespace smoothavg
