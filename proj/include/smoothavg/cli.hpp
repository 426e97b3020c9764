#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace smoothavg {

enum class ExitCode : int {
    ok = 0,
    verification_failure = 1,
    input_error = 2,
    kernel_contract = 3,
    solver_stall = 4,
};

enum class Subcommand { analyze, generate, optimize, verify, smooth, continuum };

struct RunConfig {
    Subcommand subcommand = Subcommand::analyze;
    std::optional<std::string> input;
    std::optional<std::string> output;
    int n = 0;
    double tol = 1e-10;
    std::optional<std::string> stencil;
    std::vector<double> eps{1e-2, 5e-3};
    bool symmetrize = false;
    bool renormalize = false;
    bool full = false;

    /// Throws InputError unless input and output differ, 0 <= n <= 64 and
    /// tol lies in [1e-14, 1e-2].
    void validate() const;
};

/// Parses "1,-2,1" or "1,-2,1@-1" (taps, then an optional offset after '@').
struct ParsedStencil {
    std::vector<double> taps;
    long offset = 0;
};
[[nodiscard]] ParsedStencil parse_stencil(const std::string& text);

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
[[nodiscard]] int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smoothavg
