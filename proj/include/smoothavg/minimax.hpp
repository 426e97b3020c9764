#pragma once

#include "smoothavg/chebyshev.hpp"
#include "smoothavg/kernel.hpp"

#include <string>
#include <vector>

namespace smoothavg {

/// Objective weights for min_p max_x w(x) * (|p(x)| or p(x)) with p(1) = 1.
enum class WeightKind {
    one_minus_x_times_abs,     ///< (1-x)|p|
    one_minus_x_signed_nonneg, ///< (1-x) p, normally paired with positivity
    sqrt_one_minus_x_times_abs,///< sqrt(1-x)|p|
    general,                   ///< sqrt(|s|^2(x)) |p|
};

[[nodiscard]] std::string to_string(WeightKind kind);

struct MinimaxProblem {
    int degree = 0;
    WeightKind weight = WeightKind::one_minus_x_times_abs;
    /// |s|^2 in x = cos xi; used only by WeightKind::general.
    ChebPoly magnitude_squared;
    /// Enforce p >= 0 on [-1, 1].
    bool positivity = false;
};

enum class SolveStatus { converged, stalled };

struct IterationRecord {
    double lp_value;        ///< lower bound t from the discretized LP
    double continuum_value; ///< true max of the weighted polynomial
    double violation;       ///< largest amount by which the continuum exceeds the LP model
};

struct ExtremalPoint {
    double x;
    double value;  ///< weighted value w(x) p(x) (signed) or w(x) |p(x)|
    /// +1: at the optimal level; -1: at minus the level (signed weights only); 0: at zero.
    int level;
};

struct MinimaxSolution {
    ChebPoly coeffs;
    /// Audited continuum max of the returned polynomial (an upper bound on the optimum).
    double value = 0.0;
    /// LP optimum at termination (a lower bound on the optimum).
    double lower_bound = 0.0;
    /// Near-equioscillation set of the returned polynomial, by decreasing x.
    std::vector<ExtremalPoint> active_points;
    int iterations = 0;
    /// Largest constraint violation relative to lower_bound on a 10^5-point audit grid.
    double certificate_gap = 0.0;
    SolveStatus status = SolveStatus::converged;
    std::vector<IterationRecord> trace;
    bool exploratory = false;
};

/// Cutting-plane solve over the n+1 Chebyshev coefficients and the level t.
/// Starts from 16 (n+2) Chebyshev points and adds the worst continuum point
/// per round (ties go to the candidate farthest from the current set) until
/// the continuum max exceeds t by less than tol. At most 200 rounds; a run
/// that hits the cap or stops making progress returns status stalled.
/// Throws Infeasible if the LP reports no solution.
[[nodiscard]] MinimaxSolution solve(const MinimaxProblem& problem, double tol);

/// Weighted value of p at x for the given problem.
[[nodiscard]] double weighted_value(const MinimaxProblem& problem, const ChebPoly& p, double x);

/// max_x of the weighted objective and one maximizer.
[[nodiscard]] Extremum objective_max(const MinimaxProblem& problem, const ChebPoly& p);

/// Equioscillation points: extrema within `delta` of +/- level (or of 0 for signed weights).
[[nodiscard]] std::vector<ExtremalPoint> equioscillation_points(const MinimaxProblem& problem, const ChebPoly& p,
                                                                double level, double delta);

/// Number of sign alternations in a run of extremal points (consecutive distinct levels).
[[nodiscard]] int alternation_count(const std::vector<ExtremalPoint>& points);

struct RecoveredKernel {
    DiscreteKernel kernel;
    /// Value in kernel-constant units: M(u) or L(u).
    double value;
    MinimaxSolution solution;
};

/// min over p(1)=1 of max sqrt(1-x)|p|, scaled by sqrt(2); expected box_kernel(n), 2/(2n+1).
[[nodiscard]] RecoveredKernel recover_first_deriv_extremal(int n, double tol);

/// With nonneg_constraint: min max (1-x) p over p >= 0, scaled by 2; expected
/// triangle_kernel(n), 4/(n+1)^2. Without it: min max (1-x)|p|, reported as exploratory.
[[nodiscard]] RecoveredKernel recover_laplacian_extremal(int n, bool nonneg_constraint, double tol);

/// min max sqrt(|s|^2) |p| over degree <= n for a general stencil; always exploratory.
[[nodiscard]] MinimaxSolution explore_operator(int n, const Stencil& stencil, double tol);

}  // namespace smoothavg
