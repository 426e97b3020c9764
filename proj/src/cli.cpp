#include "smoothavg/cli.hpp"

#include "smoothavg/continuum.hpp"
#include "smoothavg/errors.hpp"
#include "smoothavg/io.hpp"
#include "smoothavg/kernel.hpp"
#include "smoothavg/minimax.hpp"
#include "smoothavg/smoothness.hpp"
#include "smoothavg/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace smoothavg {

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require_distinct(const std::optional<std::string>& a, const std::optional<std::string>& b) {
    if (a && b && *a == *b) throw InputError("input and output paths must differ: " + *a);
}

void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
    if (path) {
        write_file(*path, text);
    } else {
        out << text;
    }
}

KernelOptions kernel_options(const RunConfig& cfg) {
    KernelOptions o;
    o.symmetrize = cfg.symmetrize;
    o.renormalize = cfg.renormalize;
    return o;
}

DiscreteKernel load_kernel(const std::string& path, const RunConfig& cfg) {
    const std::string text = read_file(path);
    try {
        return parse_kernel_json(text, kernel_options(cfg));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json stencil_json(const ParsedStencil& s) {
    Json j;
    j["taps"] = s.taps;
    j["offset"] = s.offset;
    return j;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const DiscreteKernel u = load_kernel(*cfg.input, cfg);
    Json j;
    j["kernel"] = kernel_to_json(u, cfg.full);
    j["first_derivative"] = to_json(first_deriv_constant(u));
    j["laplacian"] = to_json(laplacian_constant(u));
    j["nonneg_fourier"] = to_json(has_nonneg_fourier(u));
    if (cfg.stencil) {
        const ParsedStencil ps = parse_stencil(*cfg.stencil);
        const OperatorSymbol s(Stencil{ps.taps, ps.offset});
        Json op = stencil_json(ps);
        op["report"] = to_json(operator_constant(u, s));
        j["operator"] = std::move(op);
    }
    emit(cfg.output, dump_json(j), out);
    return code(ExitCode::ok);
}

int cmd_generate(const RunConfig& cfg, const std::string& kind, std::ostream& out) {
    DiscreteKernel u = identity_kernel();
    if (kind == "box") {
        u = box_kernel(cfg.n);
    } else if (kind == "triangle") {
        u = triangle_kernel(cfg.n);
    } else {
        throw InputError("generate: kind must be box or triangle, got " + kind);
    }
    emit(cfg.output, dump_json(kernel_to_json(u, cfg.full)), out);
    return code(ExitCode::ok);
}

int cmd_optimize(const RunConfig& cfg, const std::string& problem, bool nonneg, std::ostream& out,
                 std::ostream& err) {
    MinimaxSolution sol;
    double value = 0.0;
    Json j;
    j["problem"] = problem;
    j["n"] = cfg.n;
    j["tol"] = cfg.tol;
    if (problem == "first-deriv") {
        if (nonneg) throw InputError("optimize: --nonneg applies to laplacian and operator only");
        if (cfg.stencil) throw InputError("optimize: --stencil applies to operator only");
        RecoveredKernel rk = recover_first_deriv_extremal(cfg.n, cfg.tol);
        value = rk.value;
        sol = std::move(rk.solution);
    } else if (problem == "laplacian") {
        if (cfg.stencil) throw InputError("optimize: --stencil applies to operator only");
        RecoveredKernel rk = recover_laplacian_extremal(cfg.n, nonneg, cfg.tol);
        value = rk.value;
        sol = std::move(rk.solution);
    } else if (problem == "operator") {
        if (!cfg.stencil) throw InputError("optimize operator: --stencil is required");
        const ParsedStencil ps = parse_stencil(*cfg.stencil);
        const OperatorSymbol s(Stencil{ps.taps, ps.offset});
        MinimaxProblem pr;
        pr.degree = cfg.n;
        pr.weight = WeightKind::general;
        pr.magnitude_squared = s.magnitude_squared();
        pr.positivity = nonneg;
        sol = solve(pr, cfg.tol);
        sol.exploratory = true;
        value = sol.value;
        j["stencil"] = stencil_json(ps);
    } else {
        throw InputError("optimize: problem must be first-deriv, laplacian or operator, got " + problem);
    }
    j["nonneg"] = nonneg;
    j["value"] = value;
    j["kernel"] = kernel_to_json(kernel_from_symbol(sol.coeffs, cfg.n), cfg.full);
    j["solution"] = to_json(sol);
    emit(cfg.output, dump_json(j), out);
    if (sol.status == SolveStatus::stalled) {
        err << "optimize: solver stalled after " << sol.iterations << " rounds; best iterate written\n";
        return code(ExitCode::solver_stall);
    }
    return code(ExitCode::ok);
}

int cmd_verify(const std::string& suite, int n_max, std::uint64_t seed, std::ostream& out) {
    if (!is_suite(suite)) throw InputError("verify: unknown suite " + suite);
    if (n_max < 0 || n_max > 30) throw InputError("verify: --n-max must lie in [0, 30]");
    const std::vector<Check> checks = run_suite(suite, n_max, seed);
    out << format_tap(checks);
    for (const Check& c : checks) {
        if (!c.ok) return code(ExitCode::verification_failure);
    }
    return code(ExitCode::ok);
}

int cmd_smooth(const RunConfig& cfg, const std::optional<std::string>& kernel_file, std::optional<int> box,
               std::optional<int> triangle, const std::string& pad, std::ostream& out, std::ostream& err) {
    const int sources = (kernel_file ? 1 : 0) + (box ? 1 : 0) + (triangle ? 1 : 0);
    if (sources != 1) throw InputError("smooth: give exactly one of --kernel, --box, --triangle");
    require_distinct(kernel_file, cfg.output);
    if (pad != "none" && pad != "zero" && pad != "reflect") {
        throw InputError("smooth: --pad must be none, zero or reflect");
    }
    DiscreteKernel u = identity_kernel();
    if (kernel_file) {
        u = load_kernel(*kernel_file, cfg);
    } else {
        const int n = box ? *box : *triangle;
        if (n < 0 || n > 64) throw InputError("smooth: kernel radius must lie in [0, 64]");
        u = box ? box_kernel(n) : triangle_kernel(n);
    }
    const std::vector<double> f = parse_csv_series(read_file(*cfg.input));
    const long n = u.radius();
    const long len = static_cast<long>(f.size());
    if (len <= 2 * n) {
        throw InputError("smooth: series length " + std::to_string(len) + " must exceed 2n = " + std::to_string(2 * n));
    }

    Sequence source{0, f};
    long from = n;
    long to = len - 1 - n;
    if (pad == "zero") {
        from = 0;
        to = len - 1;
    } else if (pad == "reflect") {
        source.offset = -n;
        source.values.clear();
        for (long k = -n; k < len + n; ++k) {
            const long r = k < 0 ? -k : (k >= len ? 2 * (len - 1) - k : k);
            source.values.push_back(f[static_cast<std::size_t>(r)]);
        }
        from = 0;
        to = len - 1;
    }
    const Sequence g = convolve(source, u);
    std::vector<double> smoothed;
    for (long k = from; k <= to; ++k) smoothed.push_back(g.at(k));

    // Differences taken inside the emitted window are entries of S(source * u).
    double g2 = 0.0;
    double l2 = 0.0;
    for (std::size_t k = 0; k + 1 < smoothed.size(); ++k) {
        const double d = smoothed[k + 1] - smoothed[k];
        g2 += d * d;
    }
    for (std::size_t k = 0; k + 2 < smoothed.size(); ++k) {
        const double d = smoothed[k + 2] - 2.0 * smoothed[k + 1] + smoothed[k];
        l2 += d * d;
    }
    const double fn = l2_norm(source);
    const double grad_ratio = fn > 0.0 ? std::sqrt(g2) / fn : 0.0;
    const double lap_ratio = fn > 0.0 ? std::sqrt(l2) / fn : 0.0;
    const double M = first_deriv_constant(u).constant;
    const double L = laplacian_constant(u).constant;

    std::ostringstream stats;
    stats << "grad_ratio " << num(grad_ratio) << "\n"
          << "grad_ceiling_M " << num(M) << "\n"
          << "laplacian_ratio " << num(lap_ratio) << "\n"
          << "laplacian_ceiling_L " << num(L) << "\n";
    emit(cfg.output, format_csv_series(smoothed), out);
    (cfg.output ? out : err) << stats.str();
    return code(ExitCode::ok);
}

int cmd_continuum(const RunConfig& cfg, const std::optional<std::string>& builtin, int gamma_terms,
                  std::ostream& out) {
    if ((builtin ? 1 : 0) + (cfg.input ? 1 : 0) != 1) {
        throw InputError("continuum: give exactly one of a profile file or --builtin");
    }
    if (gamma_terms < 1 || gamma_terms > 100000) throw InputError("continuum: --n-max must lie in [1, 100000]");
    for (double e : cfg.eps) {
        if (!(e > 0.0 && e <= 0.1)) throw InputError("continuum: every --eps value must lie in (0, 0.1]");
    }
    std::optional<PerturbationFunction> f;
    if (builtin) {
        if (*builtin == "triangle") {
            f = PerturbationFunction::triangle();
        } else if (*builtin == "halftriangle") {
            f = PerturbationFunction::half_triangle();
        } else {
            throw InputError("continuum: --builtin must be triangle or halftriangle");
        }
    } else {
        const std::string text = read_file(*cfg.input);
        try {
            f = parse_profile_json(text);
        } catch (const InputError& e) {
            throw InputError(*cfg.input + ": " + e.what());
        }
    }
    const PerturbationReport r = perturbation_report(*f, cfg.eps, gamma_terms);
    Json j;
    j["profile"] = builtin ? *builtin : *cfg.input;
    const Json body = to_json(r);
    for (const auto& [k, v] : body.items()) j[k] = v;
    emit(cfg.output, dump_json(j), out);
    return code(ExitCode::ok);
}

}  // namespace

void RunConfig::validate() const {
    require_distinct(input, output);
    if (n < 0 || n > 64) throw InputError("n must lie in [0, 64], got " + std::to_string(n));
    if (!(tol >= 1e-14 && tol <= 1e-2)) throw InputError("tol must lie in [1e-14, 1e-2], got " + num(tol));
}

ParsedStencil parse_stencil(const std::string& text) {
    ParsedStencil s;
    std::string taps = text;
    if (const auto at = text.find('@'); at != std::string::npos) {
        taps = text.substr(0, at);
        const std::string off = text.substr(at + 1);
        std::size_t used = 0;
        try {
            s.offset = std::stol(off, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != off.size()) throw InputError("stencil offset \"" + off + "\" is not an integer");
    }
    std::stringstream ss(taps);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        while (used < item.size() && item[used] == ' ') ++used;
        if (used == 0 || used != item.size() || !std::isfinite(v)) {
            throw InputError("stencil entry \"" + item + "\" is not a number");
        }
        s.taps.push_back(v);
    }
    if (s.taps.empty()) throw InputError("stencil has no taps");
    return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Smoothness constants of discrete averaging kernels", "smoothavg"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string kind;
    std::string problem;
    std::string suite;
    bool nonneg = false;
    int n_max = 10;
    std::uint64_t seed = 20240501;
    std::optional<std::string> kernel_file;
    std::optional<int> box;
    std::optional<int> triangle;
    std::string pad = "none";
    std::optional<std::string> builtin;
    int gamma_terms = 1000;

    auto* analyze = app.add_subcommand("analyze", "Smoothness constants of a kernel file");
    analyze->add_option("kernel", cfg.input, "Kernel JSON ({\"n\", \"half\"} or {\"full\"})")->required();
    analyze->add_option("--stencil", cfg.stencil, "Extra operator as taps \"1,-2,1\" with optional \"@offset\"");
    analyze->add_flag("--symmetrize", cfg.symmetrize, "Average u(k) and u(-k) instead of rejecting asymmetry");
    analyze->add_flag("--renormalize", cfg.renormalize, "Divide by the weight sum instead of rejecting");
    analyze->add_flag("--full", cfg.full, "Echo the kernel in full form");
    analyze->add_option("-o,--output", cfg.output, "Write JSON here instead of stdout");

    auto* generate = app.add_subcommand("generate", "Write the box or triangle kernel of radius n");
    generate->add_option("kind", kind, "box or triangle")->required();
    generate->add_option("-n", cfg.n, "Kernel radius")->required();
    generate->add_flag("--full", cfg.full, "Emit {\"full\": [...]} instead of the half form");
    generate->add_option("-o,--output", cfg.output, "Write JSON here instead of stdout");

    auto* optimize = app.add_subcommand("optimize", "Minimax search for the extremal kernel");
    optimize->add_option("problem", problem, "first-deriv, laplacian or operator")->required();
    optimize->add_option("-n", cfg.n, "Kernel radius")->required();
    optimize->add_flag("--nonneg", nonneg, "Require a nonnegative Fourier symbol");
    optimize->add_option("--stencil", cfg.stencil, "Operator taps for the operator problem");
    optimize->add_option("--tol", cfg.tol, "Convergence tolerance in [1e-14, 1e-2]")->capture_default_str();
    optimize->add_flag("--full", cfg.full, "Emit the recovered kernel in full form");
    optimize->add_option("-o,--output", cfg.output, "Write JSON here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Run an invariant suite and print TAP output");
    verify->add_option("suite", suite, "thm1, thm2, thm3, thm4, thm5, prop8 or all")->required();
    verify->add_option("--n-max", n_max, "Largest n checked (at most 30)")->capture_default_str();
    verify->add_option("--seed", seed, "Seed for the random samples")->capture_default_str();

    auto* smooth = app.add_subcommand("smooth", "Smooth a one-column CSV series");
    smooth->add_option("input", cfg.input, "CSV with one numeric column, optional header")->required();
    smooth->add_option("--kernel", kernel_file, "Kernel JSON file");
    smooth->add_option("--box", box, "Use the box kernel of this radius");
    smooth->add_option("--triangle", triangle, "Use the triangle kernel of this radius");
    smooth->add_option("--pad", pad, "none (interior only), zero or reflect")->capture_default_str();
    smooth->add_flag("--symmetrize", cfg.symmetrize, "Average u(k) and u(-k) instead of rejecting asymmetry");
    smooth->add_flag("--renormalize", cfg.renormalize, "Divide by the weight sum instead of rejecting");
    smooth->add_option("-o,--output", cfg.output, "Write CSV here; the ratios then go to stdout");

    auto* continuum = app.add_subcommand("continuum", "Perturbation analysis around 1-|x|");
    continuum->add_option("profile", cfg.input, "Profile JSON {\"knots\", \"values\"} on [0, 1]");
    continuum->add_option("--builtin", builtin, "triangle or halftriangle");
    continuum->add_option("--eps", cfg.eps, "Comma-separated step sizes in (0, 0.1]")->delimiter(',')->capture_default_str();
    continuum->add_option("--n-max", gamma_terms, "Half-integers used for gamma")->capture_default_str();
    continuum->add_option("-o,--output", cfg.output, "Write JSON here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();  // program name
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? code(ExitCode::ok) : code(ExitCode::input_error);
    }

    try {
        if (analyze->parsed()) cfg.subcommand = Subcommand::analyze;
        if (generate->parsed()) cfg.subcommand = Subcommand::generate;
        if (optimize->parsed()) cfg.subcommand = Subcommand::optimize;
        if (verify->parsed()) cfg.subcommand = Subcommand::verify;
        if (smooth->parsed()) cfg.subcommand = Subcommand::smooth;
        if (continuum->parsed()) cfg.subcommand = Subcommand::continuum;
        cfg.validate();
        switch (cfg.subcommand) {
            case Subcommand::analyze: return cmd_analyze(cfg, out);
            case Subcommand::generate: return cmd_generate(cfg, kind, out);
            case Subcommand::optimize: return cmd_optimize(cfg, problem, nonneg, out, err);
            case Subcommand::verify: return cmd_verify(suite, n_max, seed, out);
            case Subcommand::smooth: return cmd_smooth(cfg, kernel_file, box, triangle, pad, out, err);
            case Subcommand::continuum: return cmd_continuum(cfg, builtin, gamma_terms, out);
        }
    } catch (const KernelContractError& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::kernel_contract);
    } catch (const Infeasible& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::solver_stall);
    } catch (const HypothesisViolated& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::verification_failure);
    } catch (const BoundViolated& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::verification_failure);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::input_error);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::input_error);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::verification_failure);
    }
    return code(ExitCode::ok);
}

}  // namespace smoothavg
