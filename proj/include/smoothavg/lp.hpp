#pragma once

#include <vector>

namespace smoothavg {

/// minimize c^T z subject to G z <= h, z free.
///
/// G is row-major with rows.size() == h.size() and every row of length c.size().
struct InequalityLp {
    std::vector<std::vector<double>> rows;
    std::vector<double> h;
    std::vector<double> c;
};

enum class LpStatus { optimal, infeasible_or_unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible_or_unbounded;
    std::vector<double> z;
    double objective = 0.0;
    int pivots = 0;
};

/// Solves the LP through its standard-form dual
///   minimize h^T y  subject to  G^T y = -c,  y >= 0
/// with a two-phase revised simplex (Dantzig pricing, Bland's rule on
/// degenerate stalls, fresh LU of the basis every pivot). The primal
/// point is recovered from the optimal basis as the simplex multipliers.
/// Intended for a handful of variables and a few hundred constraints.
[[nodiscard]] LpResult solve_lp(const InequalityLp& lp);

}  // namespace smoothavg
