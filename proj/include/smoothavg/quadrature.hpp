#pragma once

#include <functional>
#include <vector>

namespace smoothavg {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
[[nodiscard]] const QuadratureRule& gauss_legendre(int n);

/// Composite Gauss-Legendre: `panels` equal panels on [a, b], `order` nodes each.
[[nodiscard]] QuadratureRule composite_rule(double a, double b, int panels, int order);

[[nodiscard]] double integrate(const std::function<double(double)>& f, double a, double b, int panels = 1,
                               int order = 64);

}  // namespace smoothavg
