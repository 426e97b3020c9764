#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace smoothavg {

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

/// Suite names: thm1, thm2, thm3, thm4, thm5, prop8, all.
[[nodiscard]] bool is_suite(const std::string& name);

/// Runs the invariant battery for one suite over n = 0..n_max (n_max <= 30).
/// Random samples are drawn from a generator seeded with `seed`.
[[nodiscard]] std::vector<Check> run_suite(const std::string& suite, int n_max, std::uint64_t seed);

/// TAP version 13 rendering of the checks.
[[nodiscard]] std::string format_tap(const std::vector<Check>& checks);

}  // namespace smoothavg
