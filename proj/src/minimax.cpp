#include "smoothavg/minimax.hpp"

#include "smoothavg/errors.hpp"
#include "smoothavg/lp.hpp"
#include "smoothavg/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smoothavg {

namespace {

constexpr int kMaxRounds = 200;
constexpr int kAuditPoints = 100000;

bool is_signed(const MinimaxProblem& pr) { return pr.weight == WeightKind::one_minus_x_signed_nonneg; }

double weight(const MinimaxProblem& pr, double x) {
    switch (pr.weight) {
        case WeightKind::one_minus_x_times_abs:
        case WeightKind::one_minus_x_signed_nonneg:
            return 1.0 - x;
        case WeightKind::sqrt_one_minus_x_times_abs:
            return std::sqrt(std::max(0.0, 1.0 - x));
        case WeightKind::general:
            return std::sqrt(std::max(0.0, pr.magnitude_squared(x)));
    }
    return 0.0;
}

// Polynomial whose local maxima locate the objective's maxima: (1-x)p in the
// signed case, otherwise w(x)^2 p(x)^2.
ChebPoly squared_objective(const MinimaxProblem& pr, const ChebPoly& p) {
    switch (pr.weight) {
        case WeightKind::one_minus_x_times_abs: {
            const ChebPoly q = mul_one_minus_x(p);
            return q * q;
        }
        case WeightKind::sqrt_one_minus_x_times_abs:
            return mul_one_minus_x(p * p);
        case WeightKind::general:
            return pr.magnitude_squared * (p * p);
        case WeightKind::one_minus_x_signed_nonneg:
            break;
    }
    return mul_one_minus_x(p);
}

// Every local maximizer of the objective, with objective values.
std::vector<Extremum> objective_candidates(const MinimaxProblem& pr, const ChebPoly& p) {
    if (is_signed(pr)) return local_maxima(mul_one_minus_x(p));
    if (pr.weight == WeightKind::one_minus_x_times_abs) {
        // Work with (1-x)p directly rather than its square to keep full precision.
        const ChebPoly q = mul_one_minus_x(p);
        auto hi = local_maxima(q);
        for (auto e : local_maxima(-q)) hi.push_back(e);
        for (auto& e : hi) e.value = std::abs(e.value);
        return hi;
    }
    auto c = local_maxima(squared_objective(pr, p));
    for (auto& e : c) e.value = std::sqrt(std::max(0.0, e.value));
    return c;
}

Extremum best_of(const std::vector<Extremum>& c) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& e : c) best = std::max(best, e.value);
    Extremum out{best, -2.0};
    for (const auto& e : c) {
        if (e.value >= best - 1e-13 * std::abs(best) && e.x > out.x) out = e;
    }
    return out;
}

std::vector<double> chebyshev_row(int n, double x) {
    std::vector<double> t(static_cast<std::size_t>(n) + 1);
    t[0] = 1.0;
    if (n >= 1) t[1] = x;
    for (int k = 2; k <= n; ++k) {
        t[static_cast<std::size_t>(k)] = 2.0 * x * t[static_cast<std::size_t>(k) - 1] - t[static_cast<std::size_t>(k) - 2];
    }
    return t;
}

void append_rows(const MinimaxProblem& pr, double x, InequalityLp& lp) {
    const int n = pr.degree;
    const auto t = chebyshev_row(n, x);
    std::vector<double> phi(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) phi[static_cast<std::size_t>(k) - 1] = t[static_cast<std::size_t>(k)] - 1.0;
    const double w = weight(pr, x);

    std::vector<double> upper(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) upper[static_cast<std::size_t>(k)] = w * phi[static_cast<std::size_t>(k)];
    upper.back() = -1.0;
    lp.rows.push_back(upper);
    lp.h.push_back(-w);

    if (!is_signed(pr)) {
        std::vector<double> lower(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k < n; ++k) lower[static_cast<std::size_t>(k)] = -w * phi[static_cast<std::size_t>(k)];
        lower.back() = -1.0;
        lp.rows.push_back(lower);
        lp.h.push_back(w);
    }
    if (pr.positivity) {
        std::vector<double> pos(static_cast<std::size_t>(n) + 1, 0.0);
        for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(k)] = -phi[static_cast<std::size_t>(k)];
        lp.rows.push_back(pos);
        lp.h.push_back(1.0);
    }
}

ChebPoly polynomial_from(const std::vector<double>& z, int n) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    double rest = 0.0;
    for (int k = 1; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = z[static_cast<std::size_t>(k) - 1];
        rest += c[static_cast<std::size_t>(k)];
    }
    c[0] = 1.0 - rest;
    return ChebPoly(std::move(c));
}

double distance_to_set(double x, const std::vector<double>& set) {
    double d = std::numeric_limits<double>::infinity();
    for (double s : set) d = std::min(d, std::abs(s - x));
    return d;
}

}  // namespace

std::string to_string(WeightKind kind) {
    switch (kind) {
        case WeightKind::one_minus_x_times_abs: return "one_minus_x_times_abs";
        case WeightKind::one_minus_x_signed_nonneg: return "one_minus_x_signed_nonneg";
        case WeightKind::sqrt_one_minus_x_times_abs: return "sqrt_one_minus_x_times_abs";
        case WeightKind::general: return "general";
    }
    return "unknown";
}

double weighted_value(const MinimaxProblem& problem, const ChebPoly& p, double x) {
    const double v = weight(problem, x) * p(x);
    return is_signed(problem) ? v : std::abs(v);
}

Extremum objective_max(const MinimaxProblem& problem, const ChebPoly& p) {
    return best_of(objective_candidates(problem, p));
}

std::vector<ExtremalPoint> equioscillation_points(const MinimaxProblem& problem, const ChebPoly& p, double level,
                                                  double delta) {
    std::vector<ExtremalPoint> out;
    if (is_signed(problem)) {
        const ChebPoly q = mul_one_minus_x(p);
        for (const auto& e : local_maxima(q)) {
            if (e.value >= level - delta) out.push_back({e.x, e.value, +1});
        }
        for (const auto& e : local_maxima(-q)) {
            if (-e.value <= delta) out.push_back({e.x, -e.value, 0});
        }
    } else {
        for (const auto& e : objective_candidates(problem, p)) {
            if (e.value >= level - delta) out.push_back({e.x, e.value, p(e.x) >= 0.0 ? +1 : -1});
        }
    }
    std::sort(out.begin(), out.end(), [](const ExtremalPoint& a, const ExtremalPoint& b) { return a.x > b.x; });
    return out;
}

int alternation_count(const std::vector<ExtremalPoint>& points) {
    if (points.empty()) return 0;
    int runs = 1;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].level != points[i - 1].level) ++runs;
    }
    return runs;
}

MinimaxSolution solve(const MinimaxProblem& problem, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("solve: tol must be positive");
    if (problem.degree < 0) throw std::invalid_argument("solve: degree must be nonnegative");
    const int n = problem.degree;

    InequalityLp lp;
    lp.c.assign(static_cast<std::size_t>(n) + 1, 0.0);
    lp.c.back() = 1.0;
    std::vector<double> points = chebyshev_extreme_points(16 * (n + 2));
    for (double x : points) append_rows(problem, x, lp);

    MinimaxSolution best;
    double best_gap = std::numeric_limits<double>::infinity();
    bool converged = false;
    bool have_best = false;

    for (int round = 1; round <= kMaxRounds; ++round) {
        const LpResult res = solve_lp(lp);
        if (res.status != LpStatus::optimal) throw Infeasible("minimax LP has no optimal solution");
        const ChebPoly p = polynomial_from(res.z, n);
        const double t = res.z.back();

        const auto candidates = objective_candidates(problem, p);
        const Extremum top = best_of(candidates);
        const double obj_violation = top.value - t;
        double pos_violation = 0.0;
        Extremum low{0.0, 1.0};
        if (problem.positivity) {
            low = min_value(p);
            pos_violation = -low.value;
        }
        const double gap = std::max(obj_violation, pos_violation);
        best.trace.push_back({t, top.value, gap});

        if (!have_best || gap < best_gap) {
            have_best = true;
            best_gap = gap;
            best.coeffs = p;
            best.value = top.value;
            best.lower_bound = t;
            best.iterations = round;
        }
        if (obj_violation < tol && pos_violation < tol) {
            best.coeffs = p;
            best.value = top.value;
            best.lower_bound = t;
            best.iterations = round;
            converged = true;
            break;
        }

        double next;
        if (pos_violation > obj_violation) {
            next = low.x;
        } else {
            const double cutoff = top.value - 0.01 * obj_violation;
            next = top.x;
            double far = -1.0;
            for (const auto& e : candidates) {
                if (e.value < cutoff) continue;
                const double d = distance_to_set(e.x, points);
                if (d > far) {
                    far = d;
                    next = e.x;
                }
            }
        }
        if (distance_to_set(next, points) <= 1e-15) break;  // no progress possible
        points.push_back(next);
        append_rows(problem, next, lp);
    }

    best.status = converged ? SolveStatus::converged : SolveStatus::stalled;

    double audit = 0.0;
    for (int i = 0; i < kAuditPoints; ++i) {
        const double x = -1.0 + 2.0 * i / (kAuditPoints - 1);
        audit = std::max(audit, weighted_value(problem, best.coeffs, x) - best.lower_bound);
        if (problem.positivity) audit = std::max(audit, -best.coeffs(x));
    }
    best.certificate_gap = audit;
    best.active_points = equioscillation_points(problem, best.coeffs, best.value, 1e-6);
    return best;
}

RecoveredKernel recover_first_deriv_extremal(int n, double tol) {
    MinimaxProblem pr;
    pr.degree = n;
    pr.weight = WeightKind::sqrt_one_minus_x_times_abs;
    MinimaxSolution sol = solve(pr, tol);
    DiscreteKernel k = kernel_from_symbol(sol.coeffs, n);
    const double value = std::sqrt(2.0) * sol.value;
    return {std::move(k), value, std::move(sol)};
}

RecoveredKernel recover_laplacian_extremal(int n, bool nonneg_constraint, double tol) {
    MinimaxProblem pr;
    pr.degree = n;
    pr.weight = nonneg_constraint ? WeightKind::one_minus_x_signed_nonneg : WeightKind::one_minus_x_times_abs;
    pr.positivity = nonneg_constraint;
    MinimaxSolution sol = solve(pr, tol);
    sol.exploratory = !nonneg_constraint;
    DiscreteKernel k = kernel_from_symbol(sol.coeffs, n);
    const double value = 2.0 * sol.value;
    return {std::move(k), value, std::move(sol)};
}

MinimaxSolution explore_operator(int n, const Stencil& stencil, double tol) {
    const OperatorSymbol s(stencil);
    MinimaxProblem pr;
    pr.degree = n;
    pr.weight = WeightKind::general;
    pr.magnitude_squared = s.magnitude_squared();
    MinimaxSolution sol = solve(pr, tol);
    sol.exploratory = true;
    return sol;
}

}  // namespace smoothavg
