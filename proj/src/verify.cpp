#include "smoothavg/verify.hpp"

#include "smoothavg/chebyshev.hpp"
#include "smoothavg/continuum.hpp"
#include "smoothavg/errors.hpp"
#include "smoothavg/kernel.hpp"
#include "smoothavg/minimax.hpp"
#include "smoothavg/quadrature.hpp"
#include "smoothavg/sampling.hpp"
#include "smoothavg/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace smoothavg {

namespace {

using std::numbers::pi;

constexpr int kSamplesPerN = 20;
constexpr double kSolveTol = 1e-10;

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string values(double got, double want) {
    return "got " + fmt("%.17g", got) + ", expected " + fmt("%.17g", want);
}

std::string at_n(const std::string& suite, int n, const std::string& what) {
    return suite + " n=" + std::to_string(n) + " " + what;
}

double coefficient_distance(const ChebPoly& a, const ChebPoly& b) {
    double d = 0.0;
    for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

void suite_thm1(int n_max, Rng& rng, std::vector<Check>& out) {
    for (int n = 0; n <= n_max; ++n) {
        const double bound = 2.0 / (2 * n + 1);
        const SmoothnessReport r = first_deriv_constant(box_kernel(n));
        out.push_back({at_n("thm1", n, "box constant equals 2/(2n+1)"), std::abs(r.constant - bound) <= 1e-10,
                       values(r.constant, bound)});
        out.push_back({at_n("thm1", n, "box is reported extremal"), r.is_extremal, ""});
        if (n == 0) continue;
        int below = 0;
        int not_strict = 0;
        double worst = 1e300;
        for (int s = 0; s < kSamplesPerN; ++s) {
            const DiscreteKernel u = random_kernel(n, rng);
            const double c = first_deriv_constant(u).constant;
            worst = std::min(worst, c - bound);
            if (c < bound - 1e-10) ++below;
            if (max_abs_difference(u, box_kernel(n)) > 1e-4 && c - bound <= 1e-8) ++not_strict;
        }
        out.push_back({at_n("thm1", n, "random kernels stay above 2/(2n+1)"), below == 0,
                       "min excess " + fmt("%.3g", worst)});
        out.push_back({at_n("thm1", n, "random kernels away from box are strictly above"), not_strict == 0,
                       std::to_string(not_strict) + " non-strict samples"});
    }
}

void suite_thm2(int n_max, Rng& rng, std::vector<Check>& out) {
    for (int n = 0; n <= n_max; ++n) {
        const double bound = 4.0 / ((n + 1.0) * (n + 1.0));
        const SmoothnessReport r = laplacian_constant(triangle_kernel(n));
        out.push_back({at_n("thm2", n, "triangle constant equals 4/(n+1)^2"), std::abs(r.constant - bound) <= 1e-10,
                       values(r.constant, bound)});
        out.push_back({at_n("thm2", n, "triangle is reported extremal"), r.is_extremal, ""});
        if (n == 0) continue;
        int failures = 0;
        double worst = 1e300;
        for (int s = 0; s < kSamplesPerN; ++s) {
            const DiscreteKernel u = random_nonneg_kernel(n, rng);
            try {
                const SmoothnessReport v = verify_theorem2(u);
                worst = std::min(worst, v.constant - bound);
            } catch (const Error&) {
                ++failures;
            }
        }
        out.push_back({at_n("thm2", n, "random nonnegative-symbol kernels stay above 4/(n+1)^2"), failures == 0,
                       "min excess " + fmt("%.3g", worst)});
        bool rejected = false;
        try {
            (void)verify_theorem2(box_kernel(n));
        } catch (const HypothesisViolated&) {
            rejected = true;
        }
        out.push_back({at_n("thm2", n, "box kernel is rejected for a sign-changing symbol"), rejected, ""});
    }
}

void suite_thm3(int n_max, Rng& rng, std::vector<Check>& out) {
    for (int n = 1; n <= std::max(1, n_max); ++n) {
        const double bound = std::ldexp(1.0, 1 - n);
        const MonicCheck c = monic_minimax_check(std::ldexp(1.0, 1 - n) * ChebPoly::basis(n));
        out.push_back({at_n("thm3", n, "sup of 2^(1-n) T_n equals 2^(1-n)"), std::abs(c.sup - bound) <= 1e-12,
                       values(c.sup, bound)});
        int weak = 0;
        for (int s = 0; s < 5; ++s) {
            const MonicCheck p = monic_minimax_check(random_monic_perturbation(n, rng));
            if (!(p.sup > bound)) ++weak;
        }
        out.push_back({at_n("thm3", n, "monic perturbations have a larger sup"), weak == 0,
                       std::to_string(weak) + " samples not above the bound"});
    }
}

void suite_thm4(int n_max, std::vector<Check>& out) {
    for (int n = 0; n <= n_max; ++n) {
        const double m2 = (n + 1.0) * (n + 1.0);
        const ChebPoly g = make_g(n);
        const ChebPoly lhs = mul_one_minus_x(g);
        const ChebPoly rhs = (1.0 / m2) * (ChebPoly::constant(1.0) - ChebPoly::basis(n + 1));
        const double d = coefficient_distance(lhs, rhs);
        out.push_back({at_n("thm4", n, "(1-x) g_n equals (1-T_{n+1})/(n+1)^2"), d <= 1e-14, fmt("distance %.3g", d)});
        double osc = 0.0;
        for (int j = 0; j <= n + 1; ++j) {
            const double x = std::cos(pi * j / (n + 1));
            const double want = (j % 2 == 0) ? 0.0 : 2.0 / m2;
            osc = std::max(osc, std::abs(lhs(x) - want));
        }
        out.push_back({at_n("thm4", n, "equioscillation values 0 and 2/(n+1)^2 at the nodes"), osc <= 1e-12,
                       fmt("deviation %.3g", osc)});
        const double gmin = min_value(g).value;
        out.push_back({at_n("thm4", n, "g_n is nonnegative with g_n(1) = 1"),
                       gmin >= -1e-14 && std::abs(g(1.0) - 1.0) <= 1e-14, fmt("min %.3g", gmin)});
        if (n > 10) continue;
        const RecoveredKernel rk = recover_laplacian_extremal(n, true, kSolveTol);
        const double want = 2.0 / m2;
        out.push_back({at_n("thm4", n, "minimax value equals 2/(n+1)^2"), std::abs(rk.solution.value - want) <= 1e-8,
                       values(rk.solution.value, want)});
        const double cd = coefficient_distance(rk.solution.coeffs, g);
        out.push_back({at_n("thm4", n, "minimax polynomial equals g_n"), cd <= 1e-6, fmt("distance %.3g", cd)});
    }
}

void suite_thm5(int n_max, std::vector<Check>& out) {
    for (int n = 0; n <= n_max; ++n) {
        const ChebPoly h = make_h(n);
        const double d = coefficient_distance(h * h, make_g(2 * n));
        out.push_back({at_n("thm5", n, "h_n^2 equals g_{2n}"), d <= 1e-13, fmt("distance %.3g", d)});
        const RecoveredKernel rk = recover_first_deriv_extremal(n, kSolveTol);
        const double v = rk.solution.value * rk.solution.value;
        const double want = 2.0 / ((2.0 * n + 1.0) * (2.0 * n + 1.0));
        out.push_back({at_n("thm5", n, "minimax value equals 2/(2n+1)^2"), std::abs(v - want) <= 1e-8,
                       values(v, want)});
        const double cd = coefficient_distance(rk.solution.coeffs, h);
        out.push_back({at_n("thm5", n, "minimax polynomial equals h_n"), cd <= 1e-6, fmt("distance %.3g", cd)});
    }
}

double a_by_quadrature(double j) {
    return integrate([j](double x) { return (1.0 - 3.0 * x * x) * std::cos(2.0 * pi * j * x); }, -1.0, 1.0, 16, 64);
}

void suite_prop8(Rng& rng, std::vector<Check>& out) {
    double worst_a = 0.0;
    for (int t = -40; t <= 40; ++t) {
        worst_a = std::max(worst_a, std::abs(a_coefficient(HalfInteger::from_twice(t)) - a_by_quadrature(0.5 * t)));
    }
    out.push_back({"prop8 a-coefficients match quadrature for |j| <= 20", worst_a <= 1e-12,
                   fmt("deviation %.3g", worst_a)});

    // k in [-10^6, 10^6]: odd m = 2k+1 covers 1..2*10^6+1 and -1..-(2*10^6-1); smallest terms first.
    double series = 0.0;
    for (long k = 1000000; k >= 0; --k) {
        const double m = 2.0 * k + 1.0;
        series += (k == 1000000 ? 1.0 : 2.0) / (m * m * m * m);
    }
    const double pi4 = pi * pi * pi * pi;
    out.push_back({"prop8 sum over k of 1/(2k+1)^4 equals pi^4/48", std::abs(series - pi4 / 48.0) <= 1e-12,
                   values(series, pi4 / 48.0)});

    double flat = 0.0;
    for (int n = -100; n <= 100; ++n) {
        const double xi = n + 0.5;
        flat = std::max(flat, std::abs(triangle_hat(xi) * xi * xi - 1.0 / (pi * pi)));
    }
    out.push_back({"prop8 triangle_hat(n+1/2)(n+1/2)^2 equals 1/pi^2", flat <= 1e-13, fmt("deviation %.3g", flat)});

    const PerturbationFunction tri = PerturbationFunction::triangle();
    const Prop8Sides t = prop8_sides(tri);
    out.push_back({"prop8 equality for 1-|x|", std::abs(t.lhs - t.rhs) <= 1e-10, values(t.lhs, t.rhs)});
    const Prop8Sides h = prop8_sides(PerturbationFunction::half_triangle());
    out.push_back({"prop8 strict inequality for the half-width triangle", h.lhs - h.rhs > 1e-6,
                   fmt("gap %.17g", h.lhs - h.rhs)});

    const double j0 = J_functional(tri).value;
    out.push_back({"prop8 J(1-|x|) equals 1/(36 pi^4)", std::abs(j0 - 1.0 / (36.0 * pi4)) <= 1e-10,
                   values(j0, 1.0 / (36.0 * pi4))});

    int bad = 0;
    double min_gap = 1e300;
    for (int s = 0; s < 20; ++s) {
        const Prop8Sides p = prop8_sides(random_bump_autoconvolution(rng));
        min_gap = std::min(min_gap, p.lhs - p.rhs);
        if (!p.hypothesis_holds() || p.lhs < p.rhs - 1e-9 || !(p.lhs > p.rhs)) ++bad;
    }
    out.push_back({"prop8 holds strictly on 20 autoconvolution perturbations", bad == 0,
                   fmt("min gap %.3g", min_gap)});
}

}  // namespace

bool is_suite(const std::string& name) {
    return name == "thm1" || name == "thm2" || name == "thm3" || name == "thm4" || name == "thm5" ||
           name == "prop8" || name == "all";
}

std::vector<Check> run_suite(const std::string& suite, int n_max, std::uint64_t seed) {
    if (!is_suite(suite)) throw std::invalid_argument("unknown suite " + suite);
    if (n_max < 0 || n_max > 30) throw std::invalid_argument("n_max must lie in [0, 30]");
    std::vector<Check> out;
    Rng rng(seed);
    const bool all = suite == "all";
    if (all || suite == "thm1") suite_thm1(n_max, rng, out);
    if (all || suite == "thm2") suite_thm2(n_max, rng, out);
    if (all || suite == "thm3") suite_thm3(n_max, rng, out);
    if (all || suite == "thm4") suite_thm4(n_max, out);
    if (all || suite == "thm5") suite_thm5(n_max, out);
    if (all || suite == "prop8") suite_prop8(rng, out);
    return out;
}

std::string format_tap(const std::vector<Check>& checks) {
    std::string s = "TAP version 13\n1.." + std::to_string(checks.size()) + "\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const Check& c = checks[i];
        s += (c.ok ? "ok " : "not ok ") + std::to_string(i + 1) + " - " + c.name;
        if (!c.detail.empty()) s += " # " + c.detail;
        s += "\n";
    }
    return s;
}

}  // namespace smoothavg
