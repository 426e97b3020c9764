#include "smoothavg/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace smoothavg {

namespace {

constexpr double kCostTol = 1e-11;
constexpr double kPivotTol = 1e-9;
constexpr int kMaxPivots = 200000;
constexpr int kDegenerateRun = 50;

// Dense LU with partial pivoting of a square matrix given as a list of columns.
class Lu {
public:
    explicit Lu(const std::vector<std::vector<double>>& columns) : n_(columns.size()), a_(n_ * n_), perm_(n_) {
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t i = 0; i < n_; ++i) a_[i * n_ + j] = columns[j][i];
        }
        for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
        for (std::size_t k = 0; k < n_; ++k) {
            std::size_t p = k;
            for (std::size_t i = k + 1; i < n_; ++i) {
                if (std::abs(a_[i * n_ + k]) > std::abs(a_[p * n_ + k])) p = i;
            }
            if (std::abs(a_[p * n_ + k]) < 1e-300) throw std::runtime_error("singular simplex basis");
            if (p != k) {
                for (std::size_t j = 0; j < n_; ++j) std::swap(a_[p * n_ + j], a_[k * n_ + j]);
                std::swap(perm_[p], perm_[k]);
            }
            for (std::size_t i = k + 1; i < n_; ++i) {
                const double f = a_[i * n_ + k] / a_[k * n_ + k];
                a_[i * n_ + k] = f;
                if (f == 0.0) continue;
                for (std::size_t j = k + 1; j < n_; ++j) a_[i * n_ + j] -= f * a_[k * n_ + j];
            }
        }
    }

    // B x = b.
    [[nodiscard]] std::vector<double> solve(const std::vector<double>& b) const {
        std::vector<double> y(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            double s = b[perm_[i]];
            for (std::size_t j = 0; j < i; ++j) s -= a_[i * n_ + j] * y[j];
            y[i] = s;
        }
        for (std::size_t i = n_; i-- > 0;) {
            double s = y[i];
            for (std::size_t j = i + 1; j < n_; ++j) s -= a_[i * n_ + j] * y[j];
            y[i] = s / a_[i * n_ + i];
        }
        return y;
    }

    // B^T x = b.
    [[nodiscard]] std::vector<double> solve_transposed(const std::vector<double>& b) const {
        std::vector<double> w(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            double s = b[i];
            for (std::size_t j = 0; j < i; ++j) s -= a_[j * n_ + i] * w[j];
            w[i] = s / a_[i * n_ + i];
        }
        for (std::size_t i = n_; i-- > 0;) {
            double s = w[i];
            for (std::size_t j = i + 1; j < n_; ++j) s -= a_[j * n_ + i] * w[j];
            w[i] = s;
        }
        std::vector<double> x(n_);
        for (std::size_t i = 0; i < n_; ++i) x[perm_[i]] = w[i];
        return x;
    }

private:
    std::size_t n_;
    std::vector<double> a_;
    std::vector<std::size_t> perm_;
};

// Revised simplex for  min cost^T y  s.t.  A y = b, y >= 0  with b >= 0.
// Columns m..m+d-1 are the artificial identity. The basis is refactored
// every iteration.
class Simplex {
public:
    Simplex(std::vector<std::vector<double>> columns, std::vector<double> b)
        : d_(b.size()), m_(columns.size()), cols_(std::move(columns)), b_(std::move(b)), basis_(d_) {
        for (std::size_t i = 0; i < d_; ++i) {
            std::vector<double> e(d_, 0.0);
            e[i] = 1.0;
            cols_.push_back(std::move(e));
            basis_[i] = m_ + i;
        }
    }

    [[nodiscard]] const std::vector<std::size_t>& basis() const { return basis_; }

    [[nodiscard]] Lu factor() const {
        std::vector<std::vector<double>> bc(d_);
        for (std::size_t i = 0; i < d_; ++i) bc[i] = cols_[basis_[i]];
        return Lu(bc);
    }

    [[nodiscard]] double dot(const std::vector<double>& p, std::size_t j) const {
        double s = 0.0;
        for (std::size_t i = 0; i < d_; ++i) s += p[i] * cols_[j][i];
        return s;
    }

    // Entering columns are drawn from [0, allowed). Returns false if unbounded.
    bool run(const std::vector<double>& cost, std::size_t allowed, int& pivots) {
        std::vector<bool> in_basis(cols_.size(), false);
        for (std::size_t j : basis_) in_basis[j] = true;
        int degenerate = 0;
        for (;;) {
            const Lu lu = factor();
            const std::vector<double> x = lu.solve(b_);
            std::vector<double> cb(d_);
            for (std::size_t i = 0; i < d_; ++i) cb[i] = cost[basis_[i]];
            const std::vector<double> pi = lu.solve_transposed(cb);

            // Dantzig pricing; Bland's rule takes over on long degenerate runs.
            const bool bland = degenerate >= kDegenerateRun;
            std::size_t enter = allowed;
            double most = -kCostTol;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (in_basis[j]) continue;
                const double r = cost[j] - dot(pi, j);
                if (r < most) {
                    enter = j;
                    if (bland) break;
                    most = r;
                }
            }
            if (enter == allowed) return true;

            if (++pivots > kMaxPivots) throw std::runtime_error("simplex pivot limit exceeded");
            const std::vector<double> dir = lu.solve(cols_[enter]);
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < d_; ++i) {
                if (dir[i] > kPivotTol) best = std::min(best, std::max(0.0, x[i]) / dir[i]);
            }
            if (!std::isfinite(best)) return false;
            std::size_t leave = d_;
            for (std::size_t i = 0; i < d_; ++i) {
                if (dir[i] <= kPivotTol) continue;
                if (std::max(0.0, x[i]) / dir[i] <= best + 1e-14 && (leave == d_ || basis_[i] < basis_[leave])) {
                    leave = i;
                }
            }
            degenerate = best <= 1e-14 ? degenerate + 1 : 0;
            in_basis[basis_[leave]] = false;
            in_basis[enter] = true;
            basis_[leave] = enter;
        }
    }

    // Swaps artificials left at zero level for structural columns where possible.
    void drive_out_artificials() {
        std::vector<bool> in_basis(cols_.size(), false);
        for (std::size_t j : basis_) in_basis[j] = true;
        for (std::size_t i = 0; i < d_; ++i) {
            if (basis_[i] < m_) continue;
            std::vector<double> e(d_, 0.0);
            e[i] = 1.0;
            const std::vector<double> rho = factor().solve_transposed(e);
            std::size_t pick = m_;
            double biggest = 1e-9;
            for (std::size_t j = 0; j < m_; ++j) {
                if (in_basis[j]) continue;
                const double v = std::abs(dot(rho, j));
                if (v > biggest) {
                    biggest = v;
                    pick = j;
                }
            }
            if (pick == m_) continue;  // redundant row; the artificial stays at zero
            in_basis[basis_[i]] = false;
            in_basis[pick] = true;
            basis_[i] = pick;
        }
    }

    [[nodiscard]] std::vector<double> basic_values() const { return factor().solve(b_); }

private:
    std::size_t d_;
    std::size_t m_;
    std::vector<std::vector<double>> cols_;
    std::vector<double> b_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const InequalityLp& input) {
    const std::size_t d = input.c.size();
    const std::size_t m = input.rows.size();
    if (input.h.size() != m) throw std::invalid_argument("solve_lp: h and rows differ in length");
    for (const auto& row : input.rows) {
        if (row.size() != d) throw std::invalid_argument("solve_lp: row length differs from c");
    }

    // Scale every row to unit max-norm; the feasible set is unchanged.
    std::vector<std::vector<double>> rows = input.rows;
    std::vector<double> h = input.h;
    for (std::size_t j = 0; j < m; ++j) {
        double big = 0.0;
        for (double v : rows[j]) big = std::max(big, std::abs(v));
        if (big == 0.0) continue;
        for (double& v : rows[j]) v /= big;
        h[j] /= big;
    }

    // Dual constraints G^T y = -c, each flipped so that its right side is >= 0.
    std::vector<double> sign(d, 1.0);
    std::vector<double> b(d);
    for (std::size_t i = 0; i < d; ++i) {
        sign[i] = input.c[i] > 0.0 ? -1.0 : 1.0;
        b[i] = -sign[i] * input.c[i];
    }
    std::vector<std::vector<double>> columns(m, std::vector<double>(d));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < d; ++i) columns[j][i] = sign[i] * rows[j][i];
    }

    Simplex sx(std::move(columns), b);
    LpResult result;

    std::vector<double> cost1(m + d, 0.0);
    for (std::size_t i = 0; i < d; ++i) cost1[m + i] = 1.0;
    sx.run(cost1, m + d, result.pivots);
    const std::vector<double> y = sx.basic_values();
    double infeas = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        if (sx.basis()[i] >= m) infeas += std::abs(y[i]);
    }
    if (infeas > 1e-9) return result;
    sx.drive_out_artificials();

    std::vector<double> cost2(m + d, 0.0);
    for (std::size_t j = 0; j < m; ++j) cost2[j] = h[j];
    if (!sx.run(cost2, m, result.pivots)) return result;

    // The simplex multipliers, with the flips undone, are the primal point.
    std::vector<double> cb(d);
    for (std::size_t i = 0; i < d; ++i) cb[i] = cost2[sx.basis()[i]];
    const std::vector<double> pi = sx.factor().solve_transposed(cb);
    result.z.resize(d);
    result.objective = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        result.z[i] = sign[i] * pi[i];
        result.objective += input.c[i] * result.z[i];
    }
    result.status = LpStatus::optimal;
    return result;
}

}  // namespace smoothavg
