#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace smoothavg {

/// Even function on R supported in [-1, 1], given by its right half on [0, 1].
///
/// Gauss-Legendre samples (64 nodes per panel, panels split at the declared
/// breakpoints) are cached at construction for a ladder of dyadic refinement
/// levels, so every later query is read-only. Piecewise-linear profiles keep
/// their knot table and get closed-form transforms and moments.
class PerturbationFunction {
public:
    using Evaluator = std::function<double(double)>;

    struct PiecewiseLinear {
        std::vector<double> knots;   ///< ascending, from 0 to 1
        std::vector<double> values;
    };

    /// `breakpoints` are interior points of (0, 1) where the profile may have a kink.
    /// Levels are built until frequencies up to `max_frequency` are resolved.
    static PerturbationFunction from_evaluator(Evaluator right_half, std::vector<double> breakpoints = {},
                                               double max_frequency = 1024.0);
    static PerturbationFunction piecewise_linear(std::vector<double> knots, std::vector<double> values,
                                                 double max_frequency = 1024.0);
    /// 1 - |x|.
    static PerturbationFunction triangle();
    /// (1 - 2|x|)_+.
    static PerturbationFunction half_triangle();
    static PerturbationFunction zero();
    /// g * g for an even profile g supported in [-1/2, 1/2], given on [0, 1/2].
    /// The transform is g^2 >= 0 by construction.
    static PerturbationFunction autoconvolution(Evaluator half_profile, std::vector<double> profile_breakpoints = {},
                                                double max_frequency = 1024.0);

    /// a f + b g.
    static PerturbationFunction combine(double a, const PerturbationFunction& f, double b,
                                        const PerturbationFunction& g);

    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] const std::optional<PiecewiseLinear>& exact() const noexcept { return exact_; }
    [[nodiscard]] const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
    [[nodiscard]] double max_frequency() const noexcept { return max_frequency_; }

    /// 2 * int_0^1 f(x) cos(2 pi xi x) dx by the cached Gauss-Legendre samples.
    [[nodiscard]] double fourier_by_quadrature(double xi) const;
    /// Closed form; only for piecewise-linear profiles.
    [[nodiscard]] double fourier_exact(double xi) const;
    /// int_{-1}^{1} f(x) |x|^power dx, or with |f| when `absolute`.
    [[nodiscard]] double moment(int power, bool absolute) const;

private:
    struct Level {
        double resolved_frequency;
        std::vector<double> nodes;
        std::vector<double> weights;
        std::vector<double> values;
    };

    PerturbationFunction() = default;
    void build_levels();
    [[nodiscard]] const Level& level_for(double xi) const;

    Evaluator eval_;
    std::vector<double> breakpoints_;
    std::optional<PiecewiseLinear> exact_;
    double max_frequency_ = 1024.0;
    std::vector<Level> levels_;
    std::size_t base_level_ = 0;
};

enum class FourierMethod { automatic, quadrature };

/// f^(xi) = int f(x) e^{-2 pi i xi x} dx (real since f is even). `automatic`
/// uses the closed form when the profile is piecewise linear.
[[nodiscard]] double ct_fourier(const PerturbationFunction& f, double xi,
                                FourierMethod method = FourierMethod::automatic);

/// sin(pi xi)^2 / (pi xi)^2, the transform of 1 - |x|.
[[nodiscard]] double triangle_hat(double xi);

struct JResult {
    double value;
    double sup;          ///< max over [0, cutoff] of |u^(xi)| xi^2
    double argsup;
    double moment2;      ///< || u |x|^2 ||_1
    double mass;         ///< || u ||_1
    bool tail_warning;   ///< the max sits in the last 5% of the window
};

/// || u^ |xi|^2 ||_inf^2 || u |x|^2 ||_1^2 / || u ||_1^4 with the sup taken
/// over [0, cutoff] on `grid` points plus golden-section polish.
/// Throws ZeroMass when || u ||_1 < 1e-14.
[[nodiscard]] JResult J_functional(const PerturbationFunction& u, double cutoff = 60.0, int grid = 15360);

struct GammaResult {
    double gamma;        ///< max_{0 <= n <= n_max} f^(n + 1/2) (n + 1/2)^2
    double argmax;       ///< the half-integer attaining it
    double last_term;    ///< magnitude of the n = n_max term
};

[[nodiscard]] GammaResult gamma_sup(const PerturbationFunction& f, int n_max = 1000);

/// First-order coefficient of J(u0 + eps f) at eps = 0, u0 = 1 - |x|.
[[nodiscard]] double c_f_analytic(const PerturbationFunction& f, int n_max = 1000);

struct SlopeResult {
    std::vector<double> epsilons;
    std::vector<double> central_differences;
    double slope;  ///< Richardson extrapolation of the two smallest epsilons
};

/// (J(u0 + eps f) - J(u0 - eps f)) / (2 eps) for each eps in (0, 0.1].
[[nodiscard]] SlopeResult finite_diff_slope(const PerturbationFunction& f, const std::vector<double>& eps_list);

struct Prop8Sides {
    double lhs;              ///< gamma
    double rhs;              ///< (2/pi^2) int f (1 - 3x^2)
    double hypothesis_min;   ///< min_{1 <= n <= n_max} f^(n)
    double last_term;
    [[nodiscard]] bool hypothesis_holds(double tol = 1e-12) const { return hypothesis_min >= -tol; }
};

[[nodiscard]] Prop8Sides prop8_sides(const PerturbationFunction& f, int n_max = 1000);

/// Element of Z/2, stored as twice its value.
class HalfInteger {
public:
    static HalfInteger integer(int k) { return HalfInteger(2 * k); }
    /// k + 1/2.
    static HalfInteger half(int k) { return HalfInteger(2 * k + 1); }
    static HalfInteger from_twice(int twice) { return HalfInteger(twice); }

    [[nodiscard]] bool is_integer() const noexcept { return twice_ % 2 == 0; }
    [[nodiscard]] int twice() const noexcept { return twice_; }
    [[nodiscard]] double value() const noexcept { return 0.5 * twice_; }

private:
    explicit HalfInteger(int twice) : twice_(twice) {}
    int twice_;
};

/// a_j = int_{-1}^{1} (1 - 3x^2) cos(2 pi j x) dx in closed form.
[[nodiscard]] double a_coefficient(HalfInteger j);

struct PerturbationReport {
    double J0;
    double c_f_analytic;
    double c_f_numeric;
    double gamma;
    double prop8_lhs;
    double prop8_rhs;
    double hypothesis_min;
    double gamma_last_term;
    std::vector<double> epsilons_used;
    std::vector<double> central_differences;
    bool tail_warning;
};

[[nodiscard]] PerturbationReport perturbation_report(const PerturbationFunction& f,
                                                     const std::vector<double>& eps_list, int n_max = 1000);

}  // namespace smoothavg
