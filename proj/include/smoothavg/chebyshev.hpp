#pragma once

#include <span>
#include <vector>

namespace smoothavg {

/// Polynomial c_0 + sum_{k>=1} c_k T_k(x) on [-1, 1].
///
/// Trailing coefficients that are exactly zero are dropped on construction;
/// no epsilon trimming is done, so degrees survive round-off. The zero
/// polynomial is stored as the single coefficient 0.
class ChebPoly {
public:
    ChebPoly() : coeffs_{0.0} {}
    explicit ChebPoly(std::vector<double> coeffs);

    static ChebPoly constant(double c) { return ChebPoly({c}); }
    /// T_k itself.
    static ChebPoly basis(int k);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of T_k; zero beyond the degree.
    [[nodiscard]] double operator[](int k) const noexcept {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)] : 0.0;
    }

    /// Clenshaw evaluation.
    [[nodiscard]] double operator()(double x) const noexcept;

    [[nodiscard]] ChebPoly derivative() const;

    friend ChebPoly operator+(const ChebPoly& a, const ChebPoly& b);
    friend ChebPoly operator-(const ChebPoly& a, const ChebPoly& b);
    friend ChebPoly operator*(double s, const ChebPoly& p);
    friend ChebPoly operator-(const ChebPoly& p) { return -1.0 * p; }

private:
    std::vector<double> coeffs_;
};

/// T_k(x) by the three-term recurrence.
[[nodiscard]] double cheb_T(int k, double x);

[[nodiscard]] inline double cheb_eval(const ChebPoly& p, double x) { return p(x); }

/// Product via T_j T_k = (T_{j+k} + T_{|j-k|}) / 2.
[[nodiscard]] ChebPoly cheb_mul(const ChebPoly& p, const ChebPoly& q);
[[nodiscard]] inline ChebPoly operator*(const ChebPoly& p, const ChebPoly& q) { return cheb_mul(p, q); }

/// (1 - x) p(x), using x T_k = (T_{k+1} + T_{k-1}) / 2.
[[nodiscard]] ChebPoly mul_one_minus_x(const ChebPoly& p);

struct Extremum {
    double value;
    double x;
};

/// Every local maximum of p on [-1, 1] (endpoints included), refined by
/// safeguarded Newton on p'. Sorted by decreasing x.
///
/// Seeds come from a grid of 32 (deg + 2) Chebyshev extreme points. Each
/// refinement is capped at 40 iterations and falls back to the grid value.
[[nodiscard]] std::vector<Extremum> local_maxima(const ChebPoly& p);

/// max_x p(x) on [-1, 1]. Near-ties (relative 1e-13) resolve toward x = 1.
[[nodiscard]] Extremum max_value(const ChebPoly& p);
/// min_x p(x) on [-1, 1]. Near-ties resolve toward x = 1.
[[nodiscard]] Extremum min_value(const ChebPoly& p);
/// max_x |p(x)| on [-1, 1] together with one maximizer.
[[nodiscard]] Extremum sup_abs(const ChebPoly& p);

/// g_n(x) = (1 - T_{n+1}(x)) / ((n+1)^2 (1 - x)), from its Fejer coefficients
/// c_0 = 1/(n+1), c_k = 2 (n+1-k) / (n+1)^2.
[[nodiscard]] ChebPoly make_g(int n);

/// h_n(x) = (1 + 2 sum_{k=1}^n T_k(x)) / (2n+1).
[[nodiscard]] ChebPoly make_h(int n);

/// Monomial coefficients a_0..a_d of p. Degrees above 64 are rejected; past
/// degree 32 the conversion loses digits (coefficients grow like 2^d).
[[nodiscard]] std::vector<double> to_monomial(const ChebPoly& p);
[[nodiscard]] ChebPoly from_monomial(std::span<const double> a);

struct MonicCheck {
    double sup;
    double bound;  ///< 2^{1-n}
    bool passes;
};

/// Chebyshev's lower bound on the sup norm of a monic polynomial of degree n >= 1.
/// Throws NotMonic when the leading monomial coefficient differs from 1 by more than 1e-12.
[[nodiscard]] MonicCheck monic_minimax_check(const ChebPoly& p);

/// Chebyshev extreme points cos(pi j / (count - 1)), j = 0..count-1 (descending).
[[nodiscard]] std::vector<double> chebyshev_extreme_points(int count);

}  // namespace smoothavg
