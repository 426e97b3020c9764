#include "smoothavg/cli.hpp"
#include "smoothavg/errors.hpp"
#include "smoothavg/io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace smoothavg;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "smoothavg");
    std::ostringstream out, err;
    const int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("smoothavg_test_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    [[nodiscard]] std::string file(const std::string& name, const std::string& contents) const {
        const std::string p = (path_ / name).string();
        write_file(p, contents);
        return p;
    }
    [[nodiscard]] std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

double stat(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string k;
    double v = 0.0;
    while (in >> k >> v) {
        if (k == key) return v;
    }
    FAIL("missing stat " << key);
    return 0.0;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze the extremal kernels") {
    TempDir dir;
    const std::string tri = dir.file("tri.json", dump_json(kernel_to_json(triangle_kernel(4))));
    const Run t = run({"analyze", tri});
    REQUIRE(t.code == 0);
    const Json tj = Json::parse(t.out);
    CHECK(std::abs(tj["laplacian"]["constant"].get<double>() - 4.0 / 25.0) <= 1e-12);
    CHECK(tj["laplacian"]["is_extremal"].get<bool>());
    CHECK(tj["nonneg_fourier"]["nonnegative"].get<bool>());

    const std::string box = dir.file("box.json", dump_json(kernel_to_json(box_kernel(4))));
    const Run b = run({"analyze", box});
    REQUIRE(b.code == 0);
    const Json bj = Json::parse(b.out);
    CHECK(std::abs(bj["first_derivative"]["constant"].get<double>() - 2.0 / 9.0) <= 1e-12);
    CHECK(bj["first_derivative"]["is_extremal"].get<bool>());
    CHECK_FALSE(bj["nonneg_fourier"]["nonnegative"].get<bool>());
}

TEST_CASE("analyze with an operator stencil and output file") {
    TempDir dir;
    const std::string box = dir.file("box.json", dump_json(kernel_to_json(box_kernel(2))));
    const std::string out = dir.path("out.json");
    const Run r = run({"analyze", box, "--stencil", "-1,3,-3,1", "-o", out});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const Json j = Json::parse(read_file(out));
    CHECK(j["operator"]["taps"].size() == 4);
    CHECK(j["operator"]["report"]["constant"].get<double>() > 0.0);
    CHECK(run({"analyze", box, "-o", box}).code == 2);
}

TEST_CASE("analyze rejects bad kernel files") {
    TempDir dir;
    const std::string asym = dir.file("asym.json", R"({"full": [0.2, 0.5, 0.3]})");
    CHECK(run({"analyze", asym}).code == 3);
    CHECK(run({"analyze", asym, "--symmetrize"}).code == 0);
    const std::string unnorm = dir.file("unnorm.json", R"({"n": 1, "half": [1, 1]})");
    CHECK(run({"analyze", unnorm}).code == 3);
    CHECK(run({"analyze", unnorm, "--renormalize"}).code == 0);
    const std::string broken = dir.file("broken.json", "{\n  \"n\": 1,\n  \"half\": [0.5 0.25]\n}\n");
    const Run r = run({"analyze", broken});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(run({"analyze", dir.path("missing.json")}).code == 2);
    CHECK(run({"analyze", asym, "--stencil", "0,0"}).code == 3);
    CHECK(run({"analyze", dir.file("ok.json", R"({"full": [1]})"), "--stencil", "0,0"}).code == 2);
}

TEST_CASE("generate examples") {
    const Run b = run({"generate", "box", "-n", "3"});
    REQUIRE(b.code == 0);
    const Json bj = Json::parse(b.out);
    CHECK(bj["n"] == 3);
    REQUIRE(bj["half"].size() == 4);
    for (const auto& v : bj["half"]) CHECK(v.get<double>() == 1.0 / 7.0);
    const Json tj = Json::parse(run({"generate", "triangle", "-n", "2"}).out);
    CHECK(tj["half"][0].get<double>() == 3.0 / 9.0);
    CHECK(tj["half"][1].get<double>() == 2.0 / 9.0);
    CHECK(tj["half"][2].get<double>() == 1.0 / 9.0);
    const Json t0 = Json::parse(run({"generate", "triangle", "-n", "0"}).out);
    CHECK(t0["half"].size() == 1);
    CHECK(t0["half"][0].get<double>() == 1.0);
    const Json full = Json::parse(run({"generate", "box", "-n", "1", "--full"}).out);
    CHECK(full["full"].size() == 3);
    CHECK(run({"generate", "cosine", "-n", "2"}).code == 2);
    CHECK(run({"generate", "box", "-n", "65"}).code == 2);
    CHECK(run({"generate", "box", "-n", "2", "-o", "/nonexistent/dir/k.json"}).code == 2);
}

TEST_CASE("generate then analyze reports zero gap") {
    TempDir dir;
    for (int n = 0; n <= 20; ++n) {
        const std::string b = dir.path("b.json");
        const std::string t = dir.path("t.json");
        REQUIRE(run({"generate", "box", "-n", std::to_string(n), "-o", b}).code == 0);
        REQUIRE(run({"generate", "triangle", "-n", std::to_string(n), "-o", t}).code == 0);
        const Json bj = Json::parse(run({"analyze", b}).out);
        const Json tj = Json::parse(run({"analyze", t}).out);
        CHECK(std::abs(bj["first_derivative"]["gap"].get<double>()) <= 1e-10);
        CHECK(std::abs(tj["laplacian"]["gap"].get<double>()) <= 1e-10);
    }
}

TEST_CASE("optimize examples") {
    const Run f = run({"optimize", "first-deriv", "-n", "5"});
    REQUIRE(f.code == 0);
    const Json fj = Json::parse(f.out);
    CHECK(std::abs(fj["value"].get<double>() - 2.0 / 11.0) <= 1e-8);
    for (const auto& v : fj["kernel"]["half"]) CHECK(std::abs(v.get<double>() - 1.0 / 11.0) <= 1e-6);
    CHECK(fj["solution"]["trace"].size() >= 1);

    const Run l = run({"optimize", "laplacian", "--nonneg", "-n", "5", "--tol", "1e-9"});
    REQUIRE(l.code == 0);
    const Json lj = Json::parse(l.out);
    CHECK(std::abs(lj["value"].get<double>() - 1.0 / 9.0) <= 1e-8);
    CHECK(std::abs(lj["kernel"]["half"][5].get<double>() - 1.0 / 36.0) <= 1e-6);
    CHECK_FALSE(lj["solution"]["exploratory"].get<bool>());

    const Run o = run({"optimize", "operator", "--stencil", "1,-2,1", "-n", "5"});
    REQUIRE(o.code == 0);
    const Json oj = Json::parse(o.out);
    CHECK(oj["solution"]["exploratory"].get<bool>());
    CHECK(oj["value"].get<double>() <= 1.0 / 9.0 + 1e-9);
}

TEST_CASE("optimize input errors and stalls") {
    CHECK(run({"optimize", "operator", "-n", "3"}).code == 2);
    CHECK(run({"optimize", "nothing", "-n", "3"}).code == 2);
    CHECK(run({"optimize", "first-deriv", "-n", "3", "--tol", "1e-20"}).code == 2);
    CHECK(run({"optimize", "first-deriv", "-n", "3", "--tol", "0.5"}).code == 2);
    CHECK(run({"optimize", "first-deriv"}).code == 2);
    // At the tightest tolerance the sqrt problem hits its floating-point floor and stalls,
    // but still writes its best iterate.
    TempDir dir;
    const std::string out = dir.path("stall.json");
    const Run s = run({"optimize", "first-deriv", "-n", "12", "--tol", "1e-14", "-o", out});
    CHECK(s.code == 4);
    const Json sj = Json::parse(read_file(out));
    CHECK(sj["solution"]["status"] == "stalled");
    CHECK(std::abs(sj["value"].get<double>() - 2.0 / 25.0) <= 1e-8);
}

TEST_CASE("verify examples") {
    const Run a = run({"verify", "all", "--n-max", "6"});
    CHECK(a.code == 0);
    CHECK(a.out.rfind("TAP version 13", 0) == 0);
    CHECK(a.out.find("not ok") == std::string::npos);
    const Run t5 = run({"verify", "thm5", "--n-max", "20"});
    CHECK(t5.code == 0);
    CHECK(t5.out.find("ok") != std::string::npos);
    const Run p8 = run({"verify", "prop8"});
    CHECK(p8.code == 0);
    CHECK(run({"verify", "thm9"}).code == 2);
    CHECK(run({"verify", "thm1", "--n-max", "31"}).code == 2);
    // Same seed, same output.
    CHECK(run({"verify", "thm1", "--n-max", "4", "--seed", "7"}).out == run({"verify", "thm1", "--n-max", "4", "--seed", "7"}).out);
}

TEST_CASE("smooth examples") {
    TempDir dir;
    std::string constant = "value\n";
    for (int i = 0; i < 20; ++i) constant += "2.5\n";
    const std::string flat = dir.file("flat.csv", constant);
    const Run c = run({"smooth", flat, "--box", "2"});
    REQUIRE(c.code == 0);
    const std::vector<double> cv = parse_csv_series(c.out);
    CHECK(cv.size() == 16);
    for (double v : cv) CHECK(std::abs(v - 2.5) <= 1e-15);
    CHECK(c.err.find("grad_ratio") != std::string::npos);

    std::string spike;
    for (int i = 0; i < 9; ++i) spike += (i == 4 ? "1\n" : "0\n");
    const Run s = run({"smooth", dir.file("spike.csv", spike), "--box", "1"});
    REQUIRE(s.code == 0);
    const std::vector<double> sv = parse_csv_series(s.out);
    REQUIRE(sv.size() == 7);
    CHECK(std::abs(sv[2] - 1.0 / 3.0) <= 1e-15);
    CHECK(std::abs(sv[3] - 1.0 / 3.0) <= 1e-15);
    CHECK(std::abs(sv[4] - 1.0 / 3.0) <= 1e-15);
    CHECK(sv[0] == 0.0);
}

TEST_CASE("smooth ratios stay below the ceilings") {
    TempDir dir;
    std::mt19937_64 rng(61);
    std::normal_distribution<double> noise;
    std::string csv = "x\n";
    for (int i = 0; i < 1000; ++i) csv += std::to_string(noise(rng)) + "\n";
    const std::string in = dir.file("noise.csv", csv);
    const std::string k = dir.file("k.json", R"({"n": 2, "half": [0.4, 0.2, 0.1]})");
    const std::vector<std::pair<std::vector<std::string>, std::size_t>> sources{
        {{"--triangle", "4"}, 4}, {{"--box", "3"}, 3}, {{"--kernel", k}, 2}};
    for (const auto& [source, radius] : sources) {
        for (const std::string pad : {"none", "zero", "reflect"}) {
            const std::string out = dir.path("smoothed.csv");
            std::vector<std::string> args{"smooth", in, "--pad", pad, "-o", out};
            args.insert(args.end(), source.begin(), source.end());
            const Run r = run(args);
            REQUIRE(r.code == 0);
            CHECK(stat(r.out, "grad_ratio") <= stat(r.out, "grad_ceiling_M"));
            CHECK(stat(r.out, "laplacian_ratio") <= stat(r.out, "laplacian_ceiling_L"));
            const std::size_t rows = parse_csv_series(read_file(out)).size();
            CHECK(rows == (pad == "none" ? 1000 - 2 * radius : 1000));
        }
    }
    const Run t = run({"smooth", in, "--triangle", "4"});
    CHECK(std::abs(stat(t.err, "laplacian_ceiling_L") - 4.0 / 25.0) <= 1e-12);
}

TEST_CASE("smooth input errors") {
    TempDir dir;
    const std::string bad = dir.file("bad.csv", "v\n1\n2\noops\n");
    const Run r = run({"smooth", bad, "--box", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("row 4") != std::string::npos);
    const std::string shortcsv = dir.file("short.csv", "1\n2\n3\n");
    CHECK(run({"smooth", shortcsv, "--box", "1"}).code == 0);
    CHECK(run({"smooth", shortcsv, "--box", "2"}).code == 2);
    CHECK(run({"smooth", shortcsv}).code == 2);
    CHECK(run({"smooth", shortcsv, "--box", "1", "--triangle", "1"}).code == 2);
    CHECK(run({"smooth", shortcsv, "--box", "1", "--pad", "wrap"}).code == 2);
    CHECK(run({"smooth", shortcsv, "--box", "1", "-o", shortcsv}).code == 2);
}

TEST_CASE("continuum examples") {
    const Run t = run({"continuum", "--builtin", "triangle"});
    REQUIRE(t.code == 0);
    const Json tj = Json::parse(t.out);
    const double pi4 = std::pow(std::numbers::pi, 4);
    CHECK(std::abs(tj["J0"].get<double>() - 1.0 / (36.0 * pi4)) <= 1e-10);
    CHECK(std::abs(tj["c_f_analytic"].get<double>()) <= 1e-10);
    CHECK(std::abs(tj["prop8_gap"].get<double>()) <= 1e-10);

    const Run h = run({"continuum", "--builtin", "halftriangle", "--eps", "0.01,0.001"});
    REQUIRE(h.code == 0);
    const Json hj = Json::parse(h.out);
    CHECK(hj["c_f_analytic"].get<double>() > 0.0);
    CHECK(hj["prop8_gap"].get<double>() > 1e-6);
    CHECK(hj["epsilons"].size() == 2);

    TempDir dir;
    const std::string zero = dir.file("zero.json", R"({"knots": [0, 1], "values": [0, 0]})");
    const Run z = run({"continuum", zero});
    REQUIRE(z.code == 0);
    CHECK(Json::parse(z.out)["c_f_numeric"].get<double>() == 0.0);
}

TEST_CASE("continuum input errors") {
    TempDir dir;
    CHECK(run({"continuum"}).code == 2);
    CHECK(run({"continuum", "--builtin", "square"}).code == 2);
    CHECK(run({"continuum", "--builtin", "triangle", "--eps", "0.5"}).code == 2);
    const std::string bad = dir.file("bad.json", R"({"knots": [0, 0.5], "values": [1, 0]})");
    const Run r = run({"continuum", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("knots") != std::string::npos);
}

TEST_CASE("help and unknown arguments") {
    const Run h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("analyze") != std::string::npos);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("parse_stencil and RunConfig validation") {
    const ParsedStencil p = parse_stencil("1,-2,1@-1");
    CHECK(p.taps == std::vector<double>{1.0, -2.0, 1.0});
    CHECK(p.offset == -1);
    CHECK(parse_stencil("-1, 1").offset == 0);
    CHECK_THROWS_AS((void)parse_stencil(""), InputError);
    CHECK_THROWS_AS((void)parse_stencil("1,x"), InputError);
    CHECK_THROWS_AS((void)parse_stencil("1,2@z"), InputError);
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.input = "a";
    cfg.output = "a";
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg.output = "b";
    cfg.n = 65;
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg.n = 3;
    cfg.tol = 1e-15;
    CHECK_THROWS_AS(cfg.validate(), InputError);
}

}  // TEST_SUITE
