#pragma once

#include "smoothavg/chebyshev.hpp"
#include "smoothavg/kernel.hpp"

#include <optional>

namespace smoothavg {

/// Operator norm of f -> S(f * u) on l^2(Z), reduced to a problem on x = cos xi.
struct SmoothnessReport {
    double constant = 0.0;
    /// Maximizer x in [-1, 1] of the reduced problem; xi* = arccos(arg_x).
    double arg_x = 1.0;
    /// Known sharp lower bound for this kernel's radius, when one applies.
    std::optional<double> sharp_bound;
    std::optional<double> gap;
    bool is_extremal = false;
};

/// A real difference stencil together with |s(xi)|^2 written in x = cos xi.
class OperatorSymbol {
public:
    /// Throws DegenerateOperator if |s|^2 vanishes identically.
    explicit OperatorSymbol(Stencil stencil);

    static OperatorSymbol gradient() { return OperatorSymbol(Stencil::gradient()); }
    static OperatorSymbol laplacian() { return OperatorSymbol(Stencil::laplacian()); }

    [[nodiscard]] const Stencil& stencil() const noexcept { return stencil_; }
    /// R(0) + 2 sum_m R(m) T_m(x), R the autocorrelation of the taps.
    [[nodiscard]] const ChebPoly& magnitude_squared() const noexcept { return magnitude_squared_; }

private:
    Stencil stencil_;
    ChebPoly magnitude_squared_;
};

/// The extremal tolerance used by the reports and the theorem verifiers.
inline constexpr double kExtremalTol = 1e-10;

/// M(u) = sqrt(2 max (1-x) p_u(x)^2); sharp bound 2/(2n+1), extremal iff box.
[[nodiscard]] SmoothnessReport first_deriv_constant(const DiscreteKernel& u);

/// L(u) = 2 max (1-x) |p_u(x)|; sharp bound 4/(n+1)^2. is_extremal requires a
/// nonnegative symbol and a match with the triangle kernel.
[[nodiscard]] SmoothnessReport laplacian_constant(const DiscreteKernel& u);

/// max_x sqrt(|s|^2(x) p_u(x)^2). Carries the matching sharp bound when the
/// stencil has the same |s|^2 as the gradient or the Laplacian.
[[nodiscard]] SmoothnessReport operator_constant(const DiscreteKernel& u, const OperatorSymbol& s);

struct RatioWitness {
    Sequence f;
    double ratio;
    double xi;  ///< frequency of the cosine window
};

/// f(k) = cos(xi* k) on |k| <= N with xi* from operator_constant, and the exact
/// ratio ||S(f*u)|| / ||f||.
[[nodiscard]] RatioWitness ratio_witness(const DiscreteKernel& u, const OperatorSymbol& s, long N);

/// Lower bound 2/(2n+1) with equality exactly for the box kernel.
/// Throws BoundViolated if the computed constant falls below the bound.
[[nodiscard]] SmoothnessReport verify_theorem1(const DiscreteKernel& u);

/// Lower bound 4/(n+1)^2 under a nonnegative symbol, equality exactly for the
/// triangle kernel. Throws HypothesisViolated or BoundViolated.
[[nodiscard]] SmoothnessReport verify_theorem2(const DiscreteKernel& u);

}  // namespace smoothavg
