#include "smoothavg/continuum.hpp"

#include "smoothavg/errors.hpp"
#include "smoothavg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smoothavg {

namespace {

using std::numbers::pi;

constexpr int kOrder = 64;
constexpr int kMaxLevel = 12;
// Radians of oscillation a 64-node panel integrates to near machine precision.
constexpr double kRadiansPerPanel = 40.0;

// int_a^b (alpha + beta x) cos(w x) dx for one linear segment.
double segment_cosine_integral(double a, double b, double va, double vb, double w) {
    const double beta = (vb - va) / (b - a);
    if (std::abs(w) * (b - a) <= 1.0) {
        const QuadratureRule& r = gauss_legendre(16);
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            const double x = mid + half * r.nodes[i];
            s += r.weights[i] * (va + beta * (x - a)) * std::cos(w * x);
        }
        return half * s;
    }
    return (vb * std::sin(w * b) - va * std::sin(w * a)) / w + beta * (std::cos(w * b) - std::cos(w * a)) / (w * w);
}

// int_a^b |v(x)|^abs_flag x^power dx for linear v; exact via 4-point Gauss on each sign-definite piece.
double segment_moment(double a, double b, double va, double vb, int power, bool absolute) {
    const QuadratureRule& r = gauss_legendre(4);
    auto piece = [&](double lo, double hi) {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            const double x = mid + half * r.nodes[i];
            const double v = va + (vb - va) * (x - a) / (b - a);
            s += r.weights[i] * (absolute ? std::abs(v) : v) * std::pow(x, power);
        }
        return half * s;
    };
    if (absolute && ((va < 0.0 && vb > 0.0) || (va > 0.0 && vb < 0.0))) {
        const double root = a + (b - a) * va / (va - vb);
        return piece(a, root) + piece(root, b);
    }
    return piece(a, b);
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, double& arg) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - r * (hi - lo);
    double d = lo + r * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 80 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - r * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + r * (hi - lo);
            fd = f(d);
        }
    }
    arg = fc >= fd ? c : d;
    return std::max(fc, fd);
}

}  // namespace

PerturbationFunction PerturbationFunction::from_evaluator(Evaluator right_half, std::vector<double> breakpoints,
                                                          double max_frequency) {
    if (!right_half) throw std::invalid_argument("perturbation evaluator is empty");
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::remove_if(breakpoints.begin(), breakpoints.end(),
                                     [](double b) { return !(b > 0.0 && b < 1.0); }),
                      breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
    PerturbationFunction f;
    f.eval_ = std::move(right_half);
    f.breakpoints_ = std::move(breakpoints);
    f.max_frequency_ = max_frequency;
    f.build_levels();
    return f;
}

PerturbationFunction PerturbationFunction::piecewise_linear(std::vector<double> knots, std::vector<double> values,
                                                            double max_frequency) {
    if (knots.size() < 2 || knots.size() != values.size()) {
        throw std::invalid_argument("piecewise-linear profile needs matching knots and values (at least 2)");
    }
    if (knots.front() != 0.0 || knots.back() != 1.0) {
        throw std::invalid_argument("piecewise-linear knots must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i] > knots[i - 1])) throw std::invalid_argument("piecewise-linear knots must be increasing");
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("piecewise-linear values must be finite");
    }
    PiecewiseLinear table{knots, values};
    auto eval = [table](double x) {
        const auto& k = table.knots;
        const auto it = std::upper_bound(k.begin(), k.end(), x);
        std::size_t i = static_cast<std::size_t>(std::distance(k.begin(), it));
        if (i == 0) return table.values.front();
        if (i >= k.size()) return table.values.back();
        const double t = (x - k[i - 1]) / (k[i] - k[i - 1]);
        return table.values[i - 1] + t * (table.values[i] - table.values[i - 1]);
    };
    std::vector<double> interior(knots.begin() + 1, knots.end() - 1);
    PerturbationFunction f = from_evaluator(eval, std::move(interior), max_frequency);
    f.exact_ = std::move(table);
    return f;
}

PerturbationFunction PerturbationFunction::triangle() { return piecewise_linear({0.0, 1.0}, {1.0, 0.0}); }

PerturbationFunction PerturbationFunction::half_triangle() {
    return piecewise_linear({0.0, 0.5, 1.0}, {1.0, 0.0, 0.0});
}

PerturbationFunction PerturbationFunction::zero() { return piecewise_linear({0.0, 1.0}, {0.0, 0.0}); }

PerturbationFunction PerturbationFunction::autoconvolution(Evaluator half_profile,
                                                           std::vector<double> profile_breakpoints,
                                                           double max_frequency) {
    // g(|y|) on [-1/2, 1/2]; kinks of the even extension at 0 and at the declared points.
    auto g = [half_profile](double y) {
        const double a = std::abs(y);
        return a > 0.5 ? 0.0 : half_profile(a);
    };
    std::vector<double> gbps;
    for (double b : profile_breakpoints) {
        if (b > 0.0 && b < 0.5) {
            gbps.push_back(b);
            gbps.push_back(-b);
        }
    }
    gbps.push_back(0.0);
    auto conv = [g, gbps](double x) {
        // (g*g)(x) = int_{x-1/2}^{1/2} g(y) g(x-y) dy for 0 <= x <= 1.
        const double lo = x - 0.5;
        const double hi = 0.5;
        if (hi <= lo) return 0.0;
        std::vector<double> cuts{lo, hi};
        for (double b : gbps) {
            if (b > lo && b < hi) cuts.push_back(b);        // kinks of g(y)
            if (x - b > lo && x - b < hi) cuts.push_back(x - b);  // kinks of g(x - y)
        }
        std::sort(cuts.begin(), cuts.end());
        const QuadratureRule& r = gauss_legendre(kOrder);
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double a = cuts[i];
            const double b = cuts[i + 1];
            if (b - a <= 0.0) continue;
            const double mid = 0.5 * (a + b);
            const double half = 0.5 * (b - a);
            double part = 0.0;
            for (std::size_t q = 0; q < r.nodes.size(); ++q) {
                const double y = mid + half * r.nodes[q];
                part += r.weights[q] * g(y) * g(x - y);
            }
            s += half * part;
        }
        return s;
    };
    std::vector<double> bps;
    for (double b : profile_breakpoints) {
        if (b > 0.0 && b < 0.5) {
            bps.push_back(0.5 - b);
            bps.push_back(0.5 + b);
            bps.push_back(2.0 * b);
            bps.push_back(1.0 - 2.0 * b);
        }
    }
    return from_evaluator(conv, std::move(bps), max_frequency);
}

PerturbationFunction PerturbationFunction::combine(double a, const PerturbationFunction& f, double b,
                                                   const PerturbationFunction& g) {
    PerturbationFunction out;
    auto fe = f.eval_;
    auto ge = g.eval_;
    out.eval_ = [a, b, fe, ge](double x) { return a * fe(x) + b * ge(x); };
    out.max_frequency_ = std::min(f.max_frequency_, g.max_frequency_);
    if (f.exact_ && g.exact_) {
        std::vector<double> knots = f.exact_->knots;
        knots.insert(knots.end(), g.exact_->knots.begin(), g.exact_->knots.end());
        std::sort(knots.begin(), knots.end());
        knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
        std::vector<double> values(knots.size());
        for (std::size_t i = 0; i < knots.size(); ++i) values[i] = a * f.eval_(knots[i]) + b * g.eval_(knots[i]);
        out.exact_ = PiecewiseLinear{knots, values};
    }
    if (f.breakpoints_ == g.breakpoints_ && f.levels_.size() == g.levels_.size()) {
        out.breakpoints_ = f.breakpoints_;
        out.levels_ = f.levels_;
        for (std::size_t l = 0; l < out.levels_.size(); ++l) {
            auto& vals = out.levels_[l].values;
            for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = a * f.levels_[l].values[i] + b * g.levels_[l].values[i];
        }
        out.base_level_ = std::max(f.base_level_, g.base_level_);
        return out;
    }
    std::vector<double> bps = f.breakpoints_;
    bps.insert(bps.end(), g.breakpoints_.begin(), g.breakpoints_.end());
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    out.breakpoints_ = std::move(bps);
    out.build_levels();
    return out;
}

void PerturbationFunction::build_levels() {
    std::vector<double> edges{0.0};
    edges.insert(edges.end(), breakpoints_.begin(), breakpoints_.end());
    edges.push_back(1.0);
    double widest = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) widest = std::max(widest, edges[i + 1] - edges[i]);

    levels_.clear();
    bool base_found = false;
    struct Summary {
        double m0, m2, ma, f1, f10;
    };
    Summary prev{};
    for (int level = 0; level <= kMaxLevel; ++level) {
        const int panels = 1 << level;
        Level lv;
        lv.resolved_frequency = kRadiansPerPanel * panels / (2.0 * pi * widest);
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const QuadratureRule r = composite_rule(edges[i], edges[i + 1], panels, kOrder);
            lv.nodes.insert(lv.nodes.end(), r.nodes.begin(), r.nodes.end());
            lv.weights.insert(lv.weights.end(), r.weights.begin(), r.weights.end());
        }
        lv.values.resize(lv.nodes.size());
        for (std::size_t i = 0; i < lv.nodes.size(); ++i) lv.values[i] = eval_(lv.nodes[i]);

        Summary s{0, 0, 0, 0, 0};
        for (std::size_t i = 0; i < lv.nodes.size(); ++i) {
            const double x = lv.nodes[i];
            const double w = lv.weights[i] * lv.values[i];
            s.m0 += 2.0 * w;
            s.m2 += 2.0 * w * x * x;
            s.ma += 2.0 * std::abs(w);
            s.f1 += 2.0 * w * std::cos(2.0 * pi * x);
            s.f10 += 2.0 * w * std::cos(20.0 * pi * x);
        }
        levels_.push_back(std::move(lv));
        if (level > 0 && !base_found) {
            const double scale = std::max(1.0, s.ma);
            const double diff = std::max({std::abs(s.m0 - prev.m0), std::abs(s.m2 - prev.m2), std::abs(s.ma - prev.ma),
                                          std::abs(s.f1 - prev.f1), std::abs(s.f10 - prev.f10)});
            if (diff <= 1e-12 * scale) {
                base_found = true;
                base_level_ = static_cast<std::size_t>(level);
            }
        }
        prev = s;
        if (base_found && levels_.back().resolved_frequency >= max_frequency_) break;
    }
    if (!base_found) base_level_ = levels_.size() - 1;
}

const PerturbationFunction::Level& PerturbationFunction::level_for(double xi) const {
    const double a = std::abs(xi);
    for (std::size_t l = base_level_; l < levels_.size(); ++l) {
        if (levels_[l].resolved_frequency >= a) return levels_[l];
    }
    return levels_.back();
}

double PerturbationFunction::operator()(double x) const {
    const double a = std::abs(x);
    return a > 1.0 ? 0.0 : eval_(a);
}

double PerturbationFunction::fourier_by_quadrature(double xi) const {
    const Level& lv = level_for(xi);
    const double w = 2.0 * pi * xi;
    double s = 0.0;
    for (std::size_t i = 0; i < lv.nodes.size(); ++i) s += lv.weights[i] * lv.values[i] * std::cos(w * lv.nodes[i]);
    return 2.0 * s;
}

double PerturbationFunction::fourier_exact(double xi) const {
    if (!exact_) throw std::logic_error("fourier_exact needs a piecewise-linear profile");
    const auto& k = exact_->knots;
    const auto& v = exact_->values;
    const double w = 2.0 * pi * xi;
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) s += segment_cosine_integral(k[i], k[i + 1], v[i], v[i + 1], w);
    return 2.0 * s;
}

double PerturbationFunction::moment(int power, bool absolute) const {
    if (exact_) {
        const auto& k = exact_->knots;
        const auto& v = exact_->values;
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < k.size(); ++i) s += segment_moment(k[i], k[i + 1], v[i], v[i + 1], power, absolute);
        return 2.0 * s;
    }
    const Level& lv = levels_[base_level_];
    double s = 0.0;
    for (std::size_t i = 0; i < lv.nodes.size(); ++i) {
        const double f = absolute ? std::abs(lv.values[i]) : lv.values[i];
        s += lv.weights[i] * f * std::pow(lv.nodes[i], power);
    }
    return 2.0 * s;
}

double ct_fourier(const PerturbationFunction& f, double xi, FourierMethod method) {
    if (method == FourierMethod::automatic && f.exact()) return f.fourier_exact(xi);
    return f.fourier_by_quadrature(xi);
}

double triangle_hat(double xi) {
    const double t = pi * xi;
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 3.0 + 2.0 * t2 * t2 / 45.0;
    }
    const double s = std::sin(t);
    return (s * s) / (t * t);
}

JResult J_functional(const PerturbationFunction& u, double cutoff, int grid) {
    if (cutoff < 10.0) throw std::invalid_argument("J_functional: cutoff must be at least 10");
    if (grid < 1000) throw std::invalid_argument("J_functional: grid must have at least 1000 points");
    JResult r{};
    r.mass = u.moment(0, true);
    if (r.mass < 1e-14) throw ZeroMass(r.mass);
    r.moment2 = u.moment(2, true);

    auto objective = [&u](double xi) { return std::abs(ct_fourier(u, xi)) * xi * xi; };
    const double h = cutoff / grid;
    std::vector<double> g(static_cast<std::size_t>(grid) + 1);
    for (int j = 0; j <= grid; ++j) g[static_cast<std::size_t>(j)] = objective(j * h);

    std::vector<int> peaks;
    for (int j = 1; j <= grid; ++j) {
        const auto J = static_cast<std::size_t>(j);
        const bool right_ok = (j == grid) || g[J] >= g[J + 1];
        if (g[J] >= g[J - 1] && right_ok) peaks.push_back(j);
    }
    std::sort(peaks.begin(), peaks.end(),
              [&g](int a, int b) { return g[static_cast<std::size_t>(a)] > g[static_cast<std::size_t>(b)]; });
    if (peaks.size() > 8) peaks.resize(8);

    r.sup = g[0];
    r.argsup = 0.0;
    for (int j : peaks) {
        const double lo = (j - 1) * h;
        const double hi = std::min(cutoff, (j + 1) * h);
        double arg = j * h;
        double v = golden_max(objective, lo, hi, arg);
        if (g[static_cast<std::size_t>(j)] > v) {
            v = g[static_cast<std::size_t>(j)];
            arg = j * h;
        }
        if (v > r.sup) {
            r.sup = v;
            r.argsup = arg;
        }
    }

    double head = 0.0;
    double tail = 0.0;
    for (int j = 0; j <= grid; ++j) {
        (j * h > 0.95 * cutoff ? tail : head) = std::max(j * h > 0.95 * cutoff ? tail : head, g[static_cast<std::size_t>(j)]);
    }
    r.tail_warning = tail > head * (1.0 + 1e-9);

    const double m2 = r.moment2 * r.moment2;
    const double b2 = r.mass * r.mass;
    r.value = r.sup * r.sup * m2 / (b2 * b2);
    return r;
}

GammaResult gamma_sup(const PerturbationFunction& f, int n_max) {
    if (n_max < 0) throw std::invalid_argument("gamma_sup: n_max must be nonnegative");
    GammaResult r{-std::numeric_limits<double>::infinity(), 0.5, 0.0};
    for (int n = 0; n <= n_max; ++n) {
        const double xi = n + 0.5;
        const double term = ct_fourier(f, xi) * xi * xi;
        if (term > r.gamma) {
            r.gamma = term;
            r.argmax = xi;
        }
        if (n == n_max) r.last_term = std::abs(term);
    }
    return r;
}

double c_f_analytic(const PerturbationFunction& f, int n_max) {
    const double gamma = gamma_sup(f, n_max).gamma;
    const double pi2 = pi * pi;
    const double pi4 = pi2 * pi2;
    return f.moment(2, false) / (3.0 * pi4) + gamma / (18.0 * pi2) - f.moment(0, false) / (9.0 * pi4);
}

SlopeResult finite_diff_slope(const PerturbationFunction& f, const std::vector<double>& eps_list) {
    if (eps_list.empty()) throw std::invalid_argument("finite_diff_slope: need at least one epsilon");
    for (double e : eps_list) {
        if (!(e > 0.0 && e <= 0.1)) throw std::invalid_argument("finite_diff_slope: epsilons must lie in (0, 0.1]");
    }
    const PerturbationFunction u0 = PerturbationFunction::triangle();
    SlopeResult r;
    r.epsilons = eps_list;
    for (double e : eps_list) {
        const double plus = J_functional(PerturbationFunction::combine(1.0, u0, e, f)).value;
        const double minus = J_functional(PerturbationFunction::combine(1.0, u0, -e, f)).value;
        r.central_differences.push_back((plus - minus) / (2.0 * e));
    }
    if (eps_list.size() == 1) {
        r.slope = r.central_differences.front();
        return r;
    }
    std::vector<std::size_t> order(eps_list.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return eps_list[a] < eps_list[b]; });
    const double e2 = eps_list[order[0]];
    const double e1 = eps_list[order[1]];
    const double d2 = r.central_differences[order[0]];
    const double d1 = r.central_differences[order[1]];
    r.slope = (e1 == e2) ? d2 : (e1 * e1 * d2 - e2 * e2 * d1) / (e1 * e1 - e2 * e2);
    return r;
}

Prop8Sides prop8_sides(const PerturbationFunction& f, int n_max) {
    const GammaResult g = gamma_sup(f, n_max);
    Prop8Sides s{};
    s.lhs = g.gamma;
    s.last_term = g.last_term;
    s.rhs = 2.0 / (pi * pi) * (f.moment(0, false) - 3.0 * f.moment(2, false));
    s.hypothesis_min = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= n_max; ++n) s.hypothesis_min = std::min(s.hypothesis_min, ct_fourier(f, n));
    if (n_max < 1) s.hypothesis_min = 0.0;
    return s;
}

double a_coefficient(HalfInteger j) {
    const int t = j.twice();
    if (t == 0) return 0.0;
    if (j.is_integer()) {
        const double k = t / 2;
        return -3.0 / (k * k * pi * pi);
    }
    // j = k + 1/2 with 2k + 1 = t.
    const double m = t;
    return 12.0 / (m * m * pi * pi);
}

PerturbationReport perturbation_report(const PerturbationFunction& f, const std::vector<double>& eps_list,
                                       int n_max) {
    PerturbationReport r{};
    const JResult j0 = J_functional(PerturbationFunction::triangle());
    r.J0 = j0.value;
    r.tail_warning = j0.tail_warning;
    r.c_f_analytic = c_f_analytic(f, n_max);
    const SlopeResult slope = finite_diff_slope(f, eps_list);
    r.c_f_numeric = slope.slope;
    r.epsilons_used = slope.epsilons;
    r.central_differences = slope.central_differences;
    const Prop8Sides p8 = prop8_sides(f, n_max);
    r.gamma = p8.lhs;
    r.prop8_lhs = p8.lhs;
    r.prop8_rhs = p8.rhs;
    r.hypothesis_min = p8.hypothesis_min;
    r.gamma_last_term = p8.last_term;
    return r;
}

}  // namespace smoothavg
