#include "smoothavg/io.hpp"

#include "smoothavg/errors.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace smoothavg {

namespace {

std::string format_number(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void dump(const Json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(key).dump() + ": ";
                dump(value, out, depth + 1);
            }
            out += "\n" + close + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Flat numeric arrays stay on one line.
            bool flat = true;
            for (const auto& e : j) flat = flat && (e.is_number() || e.is_null());
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    dump(j[i], out, depth + 1);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                dump(j[i], out, depth + 1);
            }
            out += "\n" + close + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

std::size_t line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

Json parse_document(std::string_view text, const char* what) {
    try {
        Json j = Json::parse(text.begin(), text.end());
        if (!j.is_object()) throw InputError(std::string(what) + ": top level must be a JSON object");
        return j;
    } catch (const Json::parse_error& e) {
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        throw InputError(std::string(what) + ": JSON syntax error on line " + std::to_string(line_of(text, byte)) +
                         ": " + e.what());
    }
}

std::vector<double> number_array(const Json& doc, const std::string& field) {
    const auto it = doc.find(field);
    if (it == doc.end()) throw InputError("field \"" + field + "\" is missing");
    if (!it->is_array()) throw InputError("field \"" + field + "\" must be an array of numbers");
    std::vector<double> out;
    out.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) {
        const Json& e = (*it)[i];
        if (!e.is_number()) {
            throw InputError("field \"" + field + "\"[" + std::to_string(i) + "] must be a number");
        }
        const double v = e.get<double>();
        if (!std::isfinite(v)) throw InputError("field \"" + field + "\"[" + std::to_string(i) + "] is not finite");
        out.push_back(v);
    }
    return out;
}

Json maybe(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view s, double& v) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(v);
}

}  // namespace

std::string dump_json(const Json& j) {
    std::string out;
    dump(j, out, 0);
    out += "\n";
    return out;
}

DiscreteKernel parse_kernel_json(std::string_view text, const KernelOptions& opts) {
    const Json doc = parse_document(text, "kernel");
    const bool has_half = doc.contains("half");
    const bool has_full = doc.contains("full");
    if (has_half == has_full) throw InputError("kernel: exactly one of \"half\" or \"full\" is required");
    if (has_half) {
        std::vector<double> half = number_array(doc, "half");
        if (half.empty()) throw InputError("field \"half\" must not be empty");
        const auto n = doc.find("n");
        if (n == doc.end()) throw InputError("field \"n\" is missing");
        if (!n->is_number_integer() || n->get<long long>() < 0) {
            throw InputError("field \"n\" must be a nonnegative integer");
        }
        if (static_cast<std::size_t>(n->get<long long>()) + 1 != half.size()) {
            throw InputError("field \"n\" = " + std::to_string(n->get<long long>()) + " but \"half\" has " +
                             std::to_string(half.size()) + " entries (expected n + 1)");
        }
        return DiscreteKernel::from_half(std::move(half), opts);
    }
    const std::vector<double> full = number_array(doc, "full");
    if (full.size() % 2 == 0) throw InputError("field \"full\" must have odd length");
    if (const auto n = doc.find("n"); n != doc.end()) {
        if (!n->is_number_integer() || static_cast<std::size_t>(2 * n->get<long long>() + 1) != full.size()) {
            throw InputError("field \"n\" does not match the length of \"full\"");
        }
    }
    return DiscreteKernel::from_full(full, opts);
}

Json kernel_to_json(const DiscreteKernel& u, bool full) {
    Json j;
    j["n"] = u.radius();
    if (full) {
        j["full"] = u.full();
    } else {
        j["half"] = std::vector<double>(u.half().begin(), u.half().end());
    }
    return j;
}

PerturbationFunction parse_profile_json(std::string_view text) {
    const Json doc = parse_document(text, "profile");
    std::vector<double> knots = number_array(doc, "knots");
    std::vector<double> values = number_array(doc, "values");
    if (knots.size() != values.size()) {
        throw InputError("fields \"knots\" and \"values\" differ in length (" + std::to_string(knots.size()) + " vs " +
                         std::to_string(values.size()) + ")");
    }
    if (knots.size() < 2) throw InputError("field \"knots\" needs at least 2 entries");
    if (knots.front() != 0.0 || knots.back() != 1.0) throw InputError("field \"knots\" must start at 0 and end at 1");
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i] > knots[i - 1])) {
            throw InputError("field \"knots\"[" + std::to_string(i) + "] is not strictly increasing");
        }
    }
    return PerturbationFunction::piecewise_linear(std::move(knots), std::move(values));
}

Json to_json(const SmoothnessReport& r) {
    Json j;
    j["constant"] = r.constant;
    j["arg_x"] = r.arg_x;
    j["sharp_bound"] = maybe(r.sharp_bound);
    j["gap"] = maybe(r.gap);
    j["is_extremal"] = r.is_extremal;
    return j;
}

Json to_json(const NonnegCheck& c) {
    Json j;
    j["nonnegative"] = c.nonnegative;
    j["min_value"] = c.min_value;
    j["witness_x"] = maybe(c.witness_x);
    return j;
}

Json to_json(const MinimaxSolution& s) {
    Json j;
    j["status"] = s.status == SolveStatus::converged ? "converged" : "stalled";
    j["exploratory"] = s.exploratory;
    j["value"] = s.value;
    j["lower_bound"] = s.lower_bound;
    j["certificate_gap"] = s.certificate_gap;
    j["iterations"] = s.iterations;
    const auto c = s.coeffs.coeffs();
    j["chebyshev_coeffs"] = std::vector<double>(c.begin(), c.end());
    Json active = Json::array();
    for (const auto& p : s.active_points) {
        active.push_back(Json{{"x", p.x}, {"value", p.value}, {"level", p.level}});
    }
    j["active_points"] = std::move(active);
    Json trace = Json::array();
    for (const auto& t : s.trace) {
        trace.push_back(Json{{"lp_value", t.lp_value}, {"continuum_value", t.continuum_value}, {"violation", t.violation}});
    }
    j["trace"] = std::move(trace);
    return j;
}

Json to_json(const PerturbationReport& r) {
    Json j;
    j["J0"] = r.J0;
    j["c_f_analytic"] = r.c_f_analytic;
    j["c_f_numeric"] = r.c_f_numeric;
    j["epsilons"] = r.epsilons_used;
    j["central_differences"] = r.central_differences;
    j["gamma"] = r.gamma;
    j["prop8_lhs"] = r.prop8_lhs;
    j["prop8_rhs"] = r.prop8_rhs;
    j["prop8_gap"] = r.prop8_lhs - r.prop8_rhs;
    j["hypothesis_min"] = r.hypothesis_min;
    j["gamma_last_term"] = r.gamma_last_term;
    j["tail_warning"] = r.tail_warning;
    return j;
}

std::vector<double> parse_csv_series(std::string_view text) {
    std::vector<double> out;
    std::size_t row = 0;
    std::size_t start = 0;
    bool seen_content = false;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++row;
        const std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (line.find(',') != std::string_view::npos) {
            throw InputError("csv row " + std::to_string(row) + ": expected a single column");
        }
        double v = 0.0;
        if (!parse_double(line, v)) {
            if (!seen_content) {
                seen_content = true;  // header
                continue;
            }
            throw InputError("csv row " + std::to_string(row) + ": \"" + std::string(line) + "\" is not a number");
        }
        seen_content = true;
        out.push_back(v);
        if (end == text.size()) break;
    }
    return out;
}

std::string format_csv_series(const std::vector<double>& values) {
    std::string out;
    for (double v : values) {
        out += format_number(v);
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InputError("cannot write " + path);
}

}  // namespace smoothavg
