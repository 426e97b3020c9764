#include "oracles.hpp"

#include "smoothavg/lp.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace smoothavg;

TEST_SUITE("lp") {

TEST_CASE("two-variable textbook problem") {
    // maximize x + y subject to x + 2y <= 4, 3x + y <= 6, x, y >= 0.
    InequalityLp lp{{{1, 2}, {3, 1}, {-1, 0}, {0, -1}}, {4, 6, 0, 0}, {-1, -1}};
    const LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(std::abs(r.objective + 2.8) <= 1e-12);
    CHECK(std::abs(r.z[0] - 1.6) <= 1e-12);
    CHECK(std::abs(r.z[1] - 1.2) <= 1e-12);
}

TEST_CASE("infeasible and unbounded problems are reported") {
    InequalityLp infeasible{{{1}, {-1}}, {-1, -1}, {1}};  // z <= -1 and z >= 1
    CHECK(solve_lp(infeasible).status == LpStatus::infeasible_or_unbounded);
    InequalityLp unbounded{{{1}}, {1}, {1}};  // minimize z with z <= 1
    CHECK(solve_lp(unbounded).status == LpStatus::infeasible_or_unbounded);
}

TEST_CASE("shape mismatches are rejected") {
    CHECK_THROWS_AS((void)solve_lp(InequalityLp{{{1, 2}}, {1, 2}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS((void)solve_lp(InequalityLp{{{1}}, {1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("degenerate vertex with many tight constraints") {
    // Several redundant constraints meet at the optimum (0, 0).
    InequalityLp lp{{{-1, 0}, {0, -1}, {-1, -1}, {-2, -1}, {-1, -2}, {1, 1}}, {0, 0, 0, 0, 0, 10}, {1, 1}};
    const LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(std::abs(r.objective) <= 1e-12);
}

TEST_CASE("random bounded problems agree with vertex enumeration") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_real_distribution<double> rhs(0.1, 2.0);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 2 + trial % 3;
        const std::size_t m = 6 + trial % 7;
        InequalityLp lp;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<double> row(d);
            for (double& v : row) v = coef(rng);
            lp.rows.push_back(row);
            lp.h.push_back(rhs(rng));
        }
        for (std::size_t k = 0; k < d; ++k) {  // box |z_k| <= 5 keeps it bounded
            std::vector<double> up(d, 0.0), down(d, 0.0);
            up[k] = 1.0;
            down[k] = -1.0;
            lp.rows.push_back(up);
            lp.rows.push_back(down);
            lp.h.push_back(5.0);
            lp.h.push_back(5.0);
        }
        lp.c.resize(d);
        for (double& v : lp.c) v = coef(rng);
        const double want = oracle::lp_vertex_enumeration(lp.rows, lp.h, lp.c);
        const LpResult r = solve_lp(lp);
        REQUIRE(r.status == LpStatus::optimal);
        CHECK(std::abs(r.objective - want) <= 1e-10);
        double obj = 0.0;
        for (std::size_t k = 0; k < d; ++k) obj += lp.c[k] * r.z[k];
        CHECK(std::abs(obj - r.objective) <= 1e-10);
        for (std::size_t i = 0; i < lp.rows.size(); ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < d; ++k) s += lp.rows[i][k] * r.z[k];
            CHECK(s <= lp.h[i] + 1e-10);
        }
    }
}

TEST_CASE("minimax-shaped problem on a grid") {
    // min t s.t. |a + b x_i| - t <= 0 with a + b = 1: the best constant-plus-linear fit.
    std::vector<std::vector<double>> rows;
    std::vector<double> h;
    for (int i = 0; i <= 40; ++i) {
        const double x = -1.0 + i / 20.0;
        const double w = 1.0 - x;
        rows.push_back({w, w * x, -1.0});
        rows.push_back({-w, -w * x, -1.0});
        h.push_back(0.0);
        h.push_back(0.0);
    }
    rows.push_back({1, 1, 0});
    rows.push_back({-1, -1, 0});
    h.push_back(1);
    h.push_back(-1);
    InequalityLp lp{rows, h, {0, 0, 1}};
    const double want = oracle::lp_vertex_enumeration(rows, h, lp.c);
    const LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(std::abs(r.objective - want) <= 1e-12);
    CHECK(std::abs(r.z[0] + r.z[1] - 1.0) <= 1e-12);
}

}  // TEST_SUITE
