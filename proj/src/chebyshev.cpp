#include "smoothavg/chebyshev.hpp"

#include "smoothavg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smoothavg {

namespace {

constexpr int kMaxConversionDegree = 64;
constexpr int kNewtonIterations = 40;

std::vector<double> trimmed(std::vector<double> c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    if (c.empty()) c.push_back(0.0);
    return c;
}

// Zero of p' in [a, b] with p'(a) > 0 > p'(b); Newton with bisection fallback.
// Returns false if the iteration cap is hit before convergence.
bool refine_critical_point(const ChebPoly& dp, const ChebPoly& ddp, double a, double b, double& root) {
    double x = 0.5 * (a + b);
    for (int it = 0; it < kNewtonIterations; ++it) {
        const double f = dp(x);
        if (f == 0.0) {
            root = x;
            return true;
        }
        if (f > 0.0) a = x; else b = x;
        const double df = ddp(x);
        const double tiny = 4e-16 * std::max(1.0, std::abs(x));
        if (df != 0.0 && std::abs(f / df) <= tiny) {
            root = x;
            return true;
        }
        double next = (df != 0.0) ? x - f / df : 0.5 * (a + b);
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        if (std::abs(next - x) <= tiny || b - a <= tiny) {
            root = next;
            return true;
        }
        x = next;
    }
    root = x;
    return false;
}

}  // namespace

ChebPoly::ChebPoly(std::vector<double> coeffs) : coeffs_(trimmed(std::move(coeffs))) {}

ChebPoly ChebPoly::basis(int k) {
    if (k < 0) throw std::invalid_argument("Chebyshev index must be nonnegative");
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    c.back() = 1.0;
    return ChebPoly(std::move(c));
}

double ChebPoly::operator()(double x) const noexcept {
    // Clenshaw: b_k = c_k + 2x b_{k+1} - b_{k+2}; p = c_0 + x b_1 - b_2.
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
        const double b0 = coeffs_[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return coeffs_[0] + x * b1 - b2;
}

ChebPoly ChebPoly::derivative() const {
    const int n = degree();
    if (n == 0) return ChebPoly();
    // d_{k-1} = d_{k+1} + 2k c_k, with d_0 halved at the end.
    std::vector<double> d(static_cast<std::size_t>(n) + 2, 0.0);
    for (std::size_t k = static_cast<std::size_t>(n); k >= 1; --k) {
        d[k - 1] = d[k + 1] + 2.0 * static_cast<double>(k) * coeffs_[k];
    }
    d[0] *= 0.5;
    d.resize(static_cast<std::size_t>(n));
    return ChebPoly(std::move(d));
}

ChebPoly operator+(const ChebPoly& a, const ChebPoly& b) {
    std::vector<double> c(static_cast<std::size_t>(std::max(a.degree(), b.degree())) + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[static_cast<int>(k)] + b[static_cast<int>(k)];
    return ChebPoly(std::move(c));
}

ChebPoly operator-(const ChebPoly& a, const ChebPoly& b) {
    std::vector<double> c(static_cast<std::size_t>(std::max(a.degree(), b.degree())) + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[static_cast<int>(k)] - b[static_cast<int>(k)];
    return ChebPoly(std::move(c));
}

ChebPoly operator*(double s, const ChebPoly& p) {
    std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& v : c) v *= s;
    return ChebPoly(std::move(c));
}

double cheb_T(int k, double x) {
    if (k < 0) throw std::invalid_argument("Chebyshev index must be nonnegative");
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int j = 1; j < k; ++j) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

ChebPoly cheb_mul(const ChebPoly& p, const ChebPoly& q) {
    const auto a = p.coeffs();
    const auto b = q.coeffs();
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            const double half = 0.5 * a[j] * b[k];
            r[j + k] += half;
            r[j > k ? j - k : k - j] += half;
        }
    }
    return ChebPoly(std::move(r));
}

ChebPoly mul_one_minus_x(const ChebPoly& p) {
    const auto c = p.coeffs();
    std::vector<double> r(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        r[k] += c[k];
        if (k == 0) {
            r[1] -= c[0];
        } else {
            r[k + 1] -= 0.5 * c[k];
            r[k - 1] -= 0.5 * c[k];
        }
    }
    return ChebPoly(std::move(r));
}

std::vector<double> chebyshev_extreme_points(int count) {
    if (count < 2) return {1.0};
    std::vector<double> xs(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        xs[static_cast<std::size_t>(j)] = std::cos(std::numbers::pi * j / (count - 1));
    }
    xs.front() = 1.0;
    xs.back() = -1.0;
    return xs;
}

std::vector<Extremum> local_maxima(const ChebPoly& p) {
    if (p.degree() == 0) return {{p(1.0), 1.0}};

    const ChebPoly dp = p.derivative();
    const ChebPoly ddp = dp.derivative();
    const auto xs = chebyshev_extreme_points(32 * (p.degree() + 2));
    const std::size_t count = xs.size();
    std::vector<double> vs(count);
    for (std::size_t j = 0; j < count; ++j) vs[j] = p(xs[j]);

    std::vector<Extremum> found;
    for (std::size_t j = 0; j < count; ++j) {
        const bool ge_right = (j == 0) || vs[j] >= vs[j - 1];
        const bool ge_left = (j + 1 == count) || vs[j] >= vs[j + 1];
        if (!(ge_right && ge_left)) continue;

        double x = xs[j];
        const double d = dp(xs[j]);
        if (d > 0.0) {
            if (j == 0) {
                x = 1.0;
            } else if (dp(xs[j - 1]) < 0.0) {
                double root;
                if (refine_critical_point(dp, ddp, xs[j], xs[j - 1], root)) x = root;
            }
        } else if (d < 0.0) {
            if (j + 1 == count) {
                x = -1.0;
            } else if (dp(xs[j + 1]) > 0.0) {
                double root;
                if (refine_critical_point(dp, ddp, xs[j + 1], xs[j], root)) x = root;
            }
        }
        double value = p(x);
        if (value < vs[j]) {
            x = xs[j];
            value = vs[j];
        }
        if (!found.empty() && std::abs(found.back().x - x) <= 1e-12) {
            if (value > found.back().value) found.back() = {value, x};
            continue;
        }
        found.push_back({value, x});
    }
    std::sort(found.begin(), found.end(), [](const Extremum& a, const Extremum& b) { return a.x > b.x; });
    return found;
}

Extremum max_value(const ChebPoly& p) {
    const auto candidates = local_maxima(p);
    double best = candidates.front().value;
    for (const auto& c : candidates) best = std::max(best, c.value);
    const double slack = 1e-13 * std::abs(best);
    for (const auto& c : candidates) {
        if (c.value >= best - slack) return c;  // sorted by decreasing x
    }
    return candidates.front();
}

Extremum min_value(const ChebPoly& p) {
    const Extremum e = max_value(-p);
    return {-e.value, e.x};
}

Extremum sup_abs(const ChebPoly& p) {
    const Extremum hi = max_value(p);
    const Extremum lo = min_value(p);
    const double a = std::abs(hi.value);
    const double b = std::abs(lo.value);
    const double slack = 1e-13 * std::max(a, b);
    if (a > b + slack) return {a, hi.x};
    if (b > a + slack) return {b, lo.x};
    return hi.x >= lo.x ? Extremum{a, hi.x} : Extremum{b, lo.x};
}

ChebPoly make_g(int n) {
    if (n < 0) throw std::invalid_argument("make_g: n must be nonnegative");
    const double m = n + 1.0;
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1.0 / m;
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = 2.0 * (m - k) / (m * m);
    return ChebPoly(std::move(c));
}

ChebPoly make_h(int n) {
    if (n < 0) throw std::invalid_argument("make_h: n must be nonnegative");
    const double m = 2.0 * n + 1.0;
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 2.0 / m);
    c[0] = 1.0 / m;
    return ChebPoly(std::move(c));
}

std::vector<double> to_monomial(const ChebPoly& p) {
    const int d = p.degree();
    if (d > kMaxConversionDegree) throw std::invalid_argument("to_monomial: degree exceeds 64");
    std::vector<double> out(static_cast<std::size_t>(d) + 1, 0.0);
    std::vector<double> prev{1.0};       // T_0
    std::vector<double> cur{0.0, 1.0};   // T_1
    out[0] += p[0];
    for (int k = 1; k <= d; ++k) {
        for (std::size_t i = 0; i < cur.size(); ++i) out[i] += p[k] * cur[i];
        std::vector<double> next(cur.size() + 1, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

ChebPoly from_monomial(std::span<const double> a) {
    if (a.empty()) return ChebPoly();
    if (a.size() - 1 > static_cast<std::size_t>(kMaxConversionDegree)) {
        throw std::invalid_argument("from_monomial: degree exceeds 64");
    }
    std::vector<double> out(a.size(), 0.0);
    std::vector<double> power{1.0};  // x^k in the Chebyshev basis
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t i = 0; i < power.size(); ++i) out[i] += a[k] * power[i];
        std::vector<double> next(power.size() + 1, 0.0);
        for (std::size_t i = 0; i < power.size(); ++i) {
            if (i == 0) {
                next[1] += power[0];
            } else {
                next[i + 1] += 0.5 * power[i];
                next[i - 1] += 0.5 * power[i];
            }
        }
        power = std::move(next);
    }
    return ChebPoly(std::move(out));
}

MonicCheck monic_minimax_check(const ChebPoly& p) {
    const int n = p.degree();
    const auto mono = to_monomial(p);
    const double leading = mono.back();
    if (n < 1 || std::abs(leading - 1.0) > 1e-12) throw NotMonic(leading);
    const double sup = sup_abs(p).value;
    const double bound = std::ldexp(1.0, 1 - n);
    return {sup, bound, sup >= bound - 1e-12};
}

}  // namespace smoothavg
