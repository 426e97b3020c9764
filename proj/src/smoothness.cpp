#include "smoothavg/smoothness.hpp"

#include "smoothavg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace smoothavg {

namespace {

bool same_coeffs(const ChebPoly& p, std::initializer_list<double> ref) {
    const int d = std::max(p.degree(), static_cast<int>(ref.size()) - 1);
    int k = 0;
    for (double r : ref) {
        if (std::abs(p[k] - r) > 1e-14) return false;
        ++k;
    }
    for (; k <= d; ++k) {
        if (std::abs(p[k]) > 1e-14) return false;
    }
    return true;
}

void fill_gap(SmoothnessReport& r, double bound) {
    r.sharp_bound = bound;
    r.gap = r.constant - bound;
}

}  // namespace

OperatorSymbol::OperatorSymbol(Stencil stencil) : stencil_(std::move(stencil)) {
    const auto& t = stencil_.taps;
    std::vector<double> c(std::max<std::size_t>(t.size(), 1), 0.0);
    for (std::size_t m = 0; m < t.size(); ++m) {
        double r = 0.0;
        for (std::size_t j = 0; j + m < t.size(); ++j) r += t[j] * t[j + m];
        c[m] = (m == 0) ? r : 2.0 * r;
    }
    magnitude_squared_ = ChebPoly(std::move(c));
    bool all_zero = true;
    for (double v : magnitude_squared_.coeffs()) all_zero = all_zero && v == 0.0;
    if (all_zero) throw DegenerateOperator();
}

SmoothnessReport first_deriv_constant(const DiscreteKernel& u) {
    const ChebPoly p = symbol(u);
    const Extremum e = max_value(mul_one_minus_x(p * p));
    SmoothnessReport r;
    r.constant = std::sqrt(2.0 * std::max(e.value, 0.0));
    r.arg_x = e.x;
    const int n = u.radius();
    fill_gap(r, 2.0 / (2.0 * n + 1.0));
    r.is_extremal = *r.gap <= kExtremalTol && max_abs_difference(u, box_kernel(n)) <= kExtremalTol;
    return r;
}

SmoothnessReport laplacian_constant(const DiscreteKernel& u) {
    const ChebPoly p = symbol(u);
    const Extremum e = sup_abs(mul_one_minus_x(p));
    SmoothnessReport r;
    r.constant = 2.0 * e.value;
    r.arg_x = e.x;
    const int n = u.radius();
    fill_gap(r, 4.0 / ((n + 1.0) * (n + 1.0)));
    r.is_extremal = *r.gap <= kExtremalTol && has_nonneg_fourier(u).nonnegative &&
                    max_abs_difference(u, triangle_kernel(n)) <= kExtremalTol;
    return r;
}

SmoothnessReport operator_constant(const DiscreteKernel& u, const OperatorSymbol& s) {
    const ChebPoly p = symbol(u);
    const Extremum e = max_value(s.magnitude_squared() * (p * p));
    SmoothnessReport r;
    r.constant = std::sqrt(std::max(e.value, 0.0));
    r.arg_x = e.x;
    const int n = u.radius();
    const auto& m2 = s.magnitude_squared();
    if (same_coeffs(m2, {2.0, -2.0})) {
        fill_gap(r, 2.0 / (2.0 * n + 1.0));
        r.is_extremal = *r.gap <= kExtremalTol && max_abs_difference(u, box_kernel(n)) <= kExtremalTol;
    } else if (same_coeffs(m2, {6.0, -8.0, 2.0})) {
        fill_gap(r, 4.0 / ((n + 1.0) * (n + 1.0)));
        r.is_extremal = *r.gap <= kExtremalTol && has_nonneg_fourier(u).nonnegative &&
                        max_abs_difference(u, triangle_kernel(n)) <= kExtremalTol;
    }
    return r;
}

RatioWitness ratio_witness(const DiscreteKernel& u, const OperatorSymbol& s, long N) {
    if (N < 1) throw std::invalid_argument("ratio_witness: N must be at least 1");
    const SmoothnessReport rep = operator_constant(u, s);
    const double xi = std::acos(std::clamp(rep.arg_x, -1.0, 1.0));
    Sequence f{-N, std::vector<double>(static_cast<std::size_t>(2 * N + 1))};
    for (long k = -N; k <= N; ++k) f.values[static_cast<std::size_t>(k + N)] = std::cos(xi * static_cast<double>(k));
    const Sequence g = apply_stencil(convolve(f, u), s.stencil());
    const double ratio = l2_norm(g) / l2_norm(f);
    return {std::move(f), ratio, xi};
}

SmoothnessReport verify_theorem1(const DiscreteKernel& u) {
    SmoothnessReport r = first_deriv_constant(u);
    if (r.constant < *r.sharp_bound - 1e-11) {
        throw BoundViolated("first-derivative constant below 2/(2n+1)",
                            std::vector<double>(u.half().begin(), u.half().end()), r.constant, *r.sharp_bound);
    }
    return r;
}

SmoothnessReport verify_theorem2(const DiscreteKernel& u) {
    const NonnegCheck nn = has_nonneg_fourier(u);
    if (!nn.nonnegative) throw HypothesisViolated(*nn.witness_x, nn.min_value);
    SmoothnessReport r = laplacian_constant(u);
    if (r.constant < *r.sharp_bound - 1e-11) {
        throw BoundViolated("Laplacian constant below 4/(n+1)^2",
                            std::vector<double>(u.half().begin(), u.half().end()), r.constant, *r.sharp_bound);
    }
    return r;
}

}  // namespace smoothavg
