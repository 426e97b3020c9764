#include "oracles.hpp"

#include "smoothavg/errors.hpp"
#include "smoothavg/sampling.hpp"
#include "smoothavg/smoothness.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace smoothavg;

namespace {

double grid_constant(const DiscreteKernel& u, const std::vector<double>& taps, long offset = 0) {
    const auto half = std::vector<double>(u.half().begin(), u.half().end());
    return oracle::xi_grid_operator_norm(half, taps, offset, 1000001);
}

const std::vector<double> kGrad{-1.0, 1.0};
const std::vector<double> kLap{1.0, -2.0, 1.0};
const std::vector<double> kThird{-1.0, 3.0, -3.0, 1.0};

}  // namespace

TEST_SUITE("smoothness") {

TEST_CASE("first_deriv_constant examples") {
    const SmoothnessReport b = first_deriv_constant(box_kernel(1));
    CHECK(std::abs(b.constant - 2.0 / 3.0) <= 1e-12);
    REQUIRE(b.sharp_bound.has_value());
    CHECK(std::abs(*b.sharp_bound - 2.0 / 3.0) <= 1e-15);
    CHECK(std::abs(*b.gap) <= 1e-12);
    CHECK(std::abs(b.arg_x - 0.5) <= 1e-8);
    CHECK(b.is_extremal);

    const SmoothnessReport id = first_deriv_constant(identity_kernel());
    CHECK(std::abs(id.constant - 2.0) <= 1e-14);
    CHECK(std::abs(id.arg_x + 1.0) <= 1e-12);
    CHECK(id.is_extremal);

    const SmoothnessReport t = first_deriv_constant(triangle_kernel(1));
    CHECK(std::abs(t.constant - 4.0 / (3.0 * std::sqrt(3.0))) <= 1e-12);
    CHECK(std::abs(t.constant - grid_constant(triangle_kernel(1), kGrad)) <= 1e-9);
    CHECK(t.constant > 2.0 / 3.0);
    CHECK_FALSE(t.is_extremal);
}

TEST_CASE("laplacian_constant examples") {
    const SmoothnessReport t1 = laplacian_constant(triangle_kernel(1));
    CHECK(std::abs(t1.constant - 1.0) <= 1e-12);
    CHECK(std::abs(*t1.gap) <= 1e-12);
    CHECK(std::abs(t1.arg_x) <= 1e-8);
    CHECK(t1.is_extremal);
    const SmoothnessReport t3 = laplacian_constant(triangle_kernel(3));
    CHECK(std::abs(t3.constant - 0.25) <= 1e-12);
    CHECK(t3.is_extremal);
    const SmoothnessReport b2 = laplacian_constant(box_kernel(2));
    CHECK(std::abs(b2.constant - grid_constant(box_kernel(2), kLap)) <= 1e-9);
    CHECK_FALSE(b2.is_extremal);
}

TEST_CASE("named kernels attain the sharp bounds") {
    for (int n = 0; n <= 20; ++n) {
        const SmoothnessReport m = first_deriv_constant(box_kernel(n));
        CHECK(std::abs(m.constant - 2.0 / (2 * n + 1)) <= 1e-10);
        CHECK(m.is_extremal);
        const SmoothnessReport l = laplacian_constant(triangle_kernel(n));
        CHECK(std::abs(l.constant - 4.0 / ((n + 1.0) * (n + 1.0))) <= 1e-10);
        CHECK(l.is_extremal);
    }
}

TEST_CASE("operator_constant examples") {
    Rng rng(21);
    for (int n = 0; n <= 10; ++n) {
        for (const DiscreteKernel& u : {random_kernel(n, rng), box_kernel(n), triangle_kernel(n)}) {
            const double g = operator_constant(u, OperatorSymbol::gradient()).constant;
            const double l = operator_constant(u, OperatorSymbol::laplacian()).constant;
            CHECK(std::abs(g - first_deriv_constant(u).constant) <= 1e-12);
            CHECK(std::abs(l - laplacian_constant(u).constant) <= 1e-12);
        }
    }
    const OperatorSymbol third(Stencil{kThird, 0});
    const double c = operator_constant(box_kernel(2), third).constant;
    CHECK(std::abs(c - grid_constant(box_kernel(2), kThird)) <= 1e-9);
    CHECK_FALSE(operator_constant(box_kernel(2), third).sharp_bound.has_value());
}

TEST_CASE("operator_constant ignores stencil shifts and sign") {
    const DiscreteKernel u = triangle_kernel(3);
    const double base = first_deriv_constant(u).constant;
    const SmoothnessReport shifted = operator_constant(u, OperatorSymbol(Stencil{{1.0, -1.0}, -4}));
    CHECK(std::abs(shifted.constant - base) <= 1e-12);
    REQUIRE(shifted.sharp_bound.has_value());
    CHECK(std::abs(*shifted.sharp_bound - 2.0 / 7.0) <= 1e-15);
}

TEST_CASE("OperatorSymbol rejects a degenerate stencil") {
    CHECK_THROWS_AS(OperatorSymbol(Stencil{{0.0, 0.0}, 0}), DegenerateOperator);
    const OperatorSymbol g = OperatorSymbol::gradient();
    // |e^{i xi} - 1|^2 = 2 - 2 cos xi.
    CHECK(std::abs(g.magnitude_squared()[0] - 2.0) <= 1e-15);
    CHECK(std::abs(g.magnitude_squared()[1] + 2.0) <= 1e-15);
}

TEST_CASE("ratio_witness examples") {
    const RatioWitness b = ratio_witness(box_kernel(1), OperatorSymbol::gradient(), 10000);
    CHECK(std::abs(b.ratio - 2.0 / 3.0) <= 0.02 * 2.0 / 3.0);
    CHECK(b.ratio <= 2.0 / 3.0 + 1e-10);
    CHECK(b.f.values.size() == 20001);
    const RatioWitness t = ratio_witness(triangle_kernel(2), OperatorSymbol::laplacian(), 10000);
    CHECK(std::abs(t.ratio - 4.0 / 9.0) <= 0.02 * 4.0 / 9.0);
    CHECK(t.ratio <= 4.0 / 9.0 + 1e-10);
}

TEST_CASE("ratio_witness grows with N and stays below the constant") {
    Rng rng(22);
    const OperatorSymbol third(Stencil{kThird, 0});
    for (const DiscreteKernel& u : {box_kernel(2), triangle_kernel(3), random_kernel(4, rng)}) {
        for (const OperatorSymbol& s : {OperatorSymbol::gradient(), OperatorSymbol::laplacian(), third}) {
            const double c = operator_constant(u, s).constant;
            double prev = 0.0;
            for (long N : {100L, 1000L, 10000L}) {
                const double r = ratio_witness(u, s, N).ratio;
                CHECK(r <= c + 1e-10);
                CHECK(r >= prev - 1e-6);
                prev = r;
            }
        }
    }
    CHECK_THROWS_AS((void)ratio_witness(box_kernel(1), OperatorSymbol::gradient(), 0), std::invalid_argument);
}

TEST_CASE("verify_theorem1 examples") {
    const SmoothnessReport b7 = verify_theorem1(box_kernel(7));
    CHECK(std::abs(*b7.gap) <= 1e-10);
    CHECK(b7.is_extremal);
    const SmoothnessReport r = verify_theorem1(DiscreteKernel::from_half({0.4, 0.3}));
    CHECK(r.constant > 2.0 / 3.0);
    CHECK_FALSE(r.is_extremal);
    const SmoothnessReport b0 = verify_theorem1(box_kernel(0));
    CHECK(std::abs(b0.constant - 2.0) <= 1e-14);
    CHECK(*b0.sharp_bound == 2.0);
    CHECK(b0.is_extremal);
}

TEST_CASE("verify_theorem2 examples") {
    const SmoothnessReport t9 = verify_theorem2(triangle_kernel(9));
    CHECK(std::abs(*t9.gap) <= 1e-10);
    CHECK(t9.is_extremal);
    try {
        (void)verify_theorem2(box_kernel(3));
        FAIL("expected HypothesisViolated");
    } catch (const HypothesisViolated& e) {
        CHECK(e.min_value < 0.0);
        CHECK(symbol(box_kernel(3))(e.witness_x) < 0.0);
    }
    Rng rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        const SmoothnessReport r = verify_theorem2(random_nonneg_kernel(2, rng));
        CHECK(r.constant >= 4.0 / 9.0 - 1e-11);
    }
}

TEST_CASE("extremal flag holds exactly for the named kernels") {
    Rng rng(25);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const DiscreteKernel u = random_kernel(n, rng);
            const SmoothnessReport m = verify_theorem1(u);
            CHECK(m.constant >= 2.0 / (2 * n + 1) - 1e-10);
            if (max_abs_difference(u, box_kernel(n)) > 1e-4) {
                CHECK(*m.gap > 1e-8);
                CHECK_FALSE(m.is_extremal);
            }
            const DiscreteKernel v = random_nonneg_kernel(n, rng);
            const SmoothnessReport l = verify_theorem2(v);
            CHECK(l.constant >= 4.0 / ((n + 1.0) * (n + 1.0)) - 1e-10);
            if (max_abs_difference(v, triangle_kernel(n)) > 1e-4) {
                CHECK(*l.gap > 1e-8);
                CHECK_FALSE(l.is_extremal);
            }
        }
        // A kernel close to the extremizer, but not within 1e-10, is not flagged.
        const DiscreteKernel box = box_kernel(n);
        std::vector<double> near(box.half().begin(), box.half().end());
        near[0] += 2e-6;
        near[1] -= 1e-6;
        const SmoothnessReport close = first_deriv_constant(DiscreteKernel::from_half(near));
        CHECK_FALSE(close.is_extremal);
    }
}

TEST_CASE("laplacian_constant uses |p_u| for sign-changing symbols") {
    for (int n = 1; n <= 6; ++n) {
        const DiscreteKernel u = box_kernel(n);
        const double want = grid_constant(u, kLap);
        CHECK(std::abs(laplacian_constant(u).constant - want) <= 1e-9 * want);
    }
}

TEST_CASE("constants agree with a dense frequency grid on random kernels") {
    Rng rng(26);
    for (int trial = 0; trial < 25; ++trial) {
        const DiscreteKernel u = random_kernel(trial % 9, rng);
        const double m = first_deriv_constant(u).constant;
        const double l = laplacian_constant(u).constant;
        CHECK(std::abs(m - grid_constant(u, kGrad)) <= 1e-8 * m);
        CHECK(std::abs(l - grid_constant(u, kLap)) <= 1e-8 * l);
    }
}

TEST_CASE("constants are homogeneous in the symbol") {
    Rng rng(27);
    const DiscreteKernel u = random_kernel(5, rng);
    const ChebPoly p = symbol(u);
    const double base = sup_abs(mul_one_minus_x(p)).value;
    for (double lambda : {0.1, -3.0, 100.0}) {
        const double scaled = sup_abs(mul_one_minus_x(lambda * p)).value;
        CHECK(std::abs(scaled - std::abs(lambda) * base) <= 1e-13 * std::abs(lambda));
        std::vector<double> half(u.half().begin(), u.half().end());
        for (double& v : half) v *= lambda;
        CHECK_THROWS_AS((void)DiscreteKernel::from_half(half), NotNormalized);
        const DiscreteKernel back = DiscreteKernel::from_half(half, {.renormalize = true});
        CHECK(std::abs(laplacian_constant(back).constant - laplacian_constant(u).constant) <= 1e-13);
    }
}

}  // TEST_SUITE
