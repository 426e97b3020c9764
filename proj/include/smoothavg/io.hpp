#pragma once

#include "smoothavg/continuum.hpp"
#include "smoothavg/kernel.hpp"
#include "smoothavg/minimax.hpp"
#include "smoothavg/smoothness.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace smoothavg {

using Json = nlohmann::ordered_json;

/// Pretty-printed JSON with every number at 17 significant digits; NaN and
/// infinities become null.
[[nodiscard]] std::string dump_json(const Json& j);

/// Parses a kernel document {"n": int, "half": [...]} or {"full": [...]}.
/// Syntax and schema problems raise InputError naming the line or field;
/// contract problems (asymmetry, normalization) raise KernelContractError.
[[nodiscard]] DiscreteKernel parse_kernel_json(std::string_view text, const KernelOptions& opts = {});
[[nodiscard]] Json kernel_to_json(const DiscreteKernel& u, bool full = false);

/// Parses {"knots": [...], "values": [...]} on [0, 1].
[[nodiscard]] PerturbationFunction parse_profile_json(std::string_view text);

[[nodiscard]] Json to_json(const SmoothnessReport& r);
[[nodiscard]] Json to_json(const NonnegCheck& c);
[[nodiscard]] Json to_json(const MinimaxSolution& s);
[[nodiscard]] Json to_json(const PerturbationReport& r);

/// One numeric value per row; an optional non-numeric header on the first
/// row is skipped. Blank lines are ignored. InputError carries the row number.
[[nodiscard]] std::vector<double> parse_csv_series(std::string_view text);
[[nodiscard]] std::string format_csv_series(const std::vector<double>& values);

[[nodiscard]] std::string read_file(const std::string& path);
/// Throws InputError when the file cannot be written.
void write_file(const std::string& path, std::string_view contents);

}  // namespace smoothavg
