#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using nncalc::cli::RunConfig;
using nncalc::cli::run_cli;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// one CSV cell, parsed back to a double
std::vector<std::vector<std::string>> csv_cells(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

double cell(const std::vector<std::vector<std::string>>& rows, std::size_t i,
            std::size_t j) {
    return std::stod(rows.at(i).at(j));
}

struct EnvGuard {
    EnvGuard() { unsetenv("NNCALC_SEED"); }
    ~EnvGuard() { unsetenv("NNCALC_SEED"); }
};

fs::path temp_file(const std::string& stem) {
    return fs::temp_directory_path() /
           (stem + "." + std::to_string(::getpid()) + ".tmp");
}

}  // namespace

TEST_CASE("arith runs one operation through a named generator") {
    EnvGuard env;
    const CliResult r = run({"arith", "--gen", "log", "--op", "add", "--lhs",
                             "7.389056", "--rhs", "7.389056"});
    REQUIRE(r.code == 0);
    const auto rows = csv_cells(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"lhs", "rhs", "result"});
    CHECK(cell(rows, 1, 2) == Approx(54.598148571136).epsilon(1e-12));

    // same operands on the mirror line land on the negative result
    const CliResult m =
        run({"arith", "--gen", "neglog", "--op", "add", "--lhs-gen", "log",
             "--lhs", "7.38905609893065", "--rhs", "-7.38905609893065"});
    REQUIRE(m.code == 0);
    CHECK(cell(csv_cells(m.out), 1, 2) ==
          Approx(-54.5981500331442).epsilon(1e-10));

    const CliResult n =
        run({"arith", "--gen", "identity", "--op", "neg", "--lhs", "3.5"});
    REQUIRE(n.code == 0);
    const auto nrows = csv_cells(n.out);
    CHECK(nrows[0] == std::vector<std::string>{"operand", "result"});
    CHECK(cell(nrows, 1, 1) == Approx(-3.5).epsilon(1e-14));
}

TEST_CASE("arith rejects bad spellings with exit code 1") {
    EnvGuard env;
    CHECK(run({"arith", "--op", "pow", "--lhs", "1", "--rhs", "2"}).code == 1);
    CHECK(run({"arith", "--op", "add", "--lhs", "1"}).code == 1);
    CHECK(run({"arith", "--op", "sub", "--lhs-gen", "log", "--lhs", "1",
               "--rhs", "2"})
              .code == 1);
    CHECK(run({"arith", "--op", "add", "--lhs", "1", "--rhs", "2", "--gen",
               "nope"})
              .code == 1);

    const CliResult r = run({"arith", "--op", "pow", "--lhs", "1", "--rhs",
                             "2"});
    CHECK(r.err.find("usage error") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("numeric failures exit with code 2") {
    EnvGuard env;
    const CliResult r = run(
        {"arith", "--gen", "log", "--op", "add", "--lhs", "-5", "--rhs", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);

    CHECK(run({"integrate", "--fn", "recip", "--lo", "-1", "--hi", "1"}).code ==
          2);
    CHECK(run({"entropy", "--dist", "0.5,0.6"}).code == 2);
    CHECK(run({"explog", "--op", "ln", "--x", "-1"}).code == 2);
}

TEST_CASE("derive, integrate and explog expose the calculus") {
    EnvGuard env;
    const CliResult d =
        run({"derive", "--genx", "log", "--fn", "identity", "--x", "2"});
    REQUIRE(d.code == 0);
    const auto drows = csv_cells(d.out);
    CHECK(drows[0] == std::vector<std::string>{"x", "derivative"});
    CHECK(cell(drows, 1, 1) == Approx(2.0).epsilon(1e-6));

    const CliResult i =
        run({"integrate", "--genx", "log", "--fn", "identity", "--lo", "1",
             "--hi", "2.718281828459045", "--tol", "1e-12"});
    REQUIRE(i.code == 0);
    CHECK(cell(csv_cells(i.out), 1, 2) ==
          Approx(1.718281828459045).epsilon(1e-11));

    const CliResult e = run({"explog", "--genx",
                             R"({"name": "kaniadakis", "params": {"kappa": 1}})",
                             "--op", "exp", "--x", "1"});
    REQUIRE(e.code == 0);
    CHECK(cell(csv_cells(e.out), 1, 1) ==
          Approx(2.41421356237309505).epsilon(1e-12));

    CHECK(run({"derive", "--fn", "warp", "--x", "1"}).code == 1);
}

TEST_CASE("entropy and knmean") {
    EnvGuard env;
    const CliResult e =
        run({"entropy", "--dist", "0.25,0.25,0.25,0.25", "--q", "2"});
    REQUIRE(e.code == 0);
    const auto erows = csv_cells(e.out);
    CHECK(erows[0] == std::vector<std::string>{"q", "shannon", "renyi"});
    CHECK(cell(erows, 1, 1) == Approx(1.38629436111989062).epsilon(1e-12));
    CHECK(cell(erows, 1, 2) == Approx(1.38629436111989062).epsilon(1e-12));

    const CliResult k = run({"knmean", "--gen", "log", "--dist", "0.25,0.75",
                             "--values", "2,8", "--deformed"});
    REQUIRE(k.code == 0);
    const auto krows = csv_cells(k.out);
    CHECK(krows[0] == std::vector<std::string>{"mean", "mean_deformed"});
    CHECK(cell(krows, 1, 0) == Approx(5.65685424949238020).epsilon(1e-12));
    CHECK(cell(krows, 1, 1) == Approx(5.65685424949238020).epsilon(1e-9));

    // whitespace-tolerant lists, garbage rejected as usage
    CHECK(run({"knmean", "--dist", "0.5, 0.5", "--values", " 1 , 2 "}).code ==
          0);
    CHECK(run({"knmean", "--dist", "0.5,abc", "--values", "1,2"}).code == 1);
    CHECK(run({"knmean", "--dist", "", "--values", "1,2"}).code == 1);
}

TEST_CASE("maxent prints the full optimality record") {
    EnvGuard env;
    const CliResult r = run({"maxent", "--levels", "0,1", "--beta", "1"});
    REQUIRE(r.code == 0);
    const auto rows = csv_cells(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"k", "energy", "u", "p", "alpha",
                                              "residual"});
    CHECK(cell(rows, 1, 2) == Approx(0.731058578630004879).epsilon(1e-12));
    CHECK(cell(rows, 2, 2) == Approx(0.268941421369995121).epsilon(1e-12));
    CHECK(cell(rows, 1, 5) < 1e-12);

    const CliResult lg = run({"maxent", "--genx", "log", "--levels", "0,1",
                              "--beta", "1"});
    REQUIRE(lg.code == 0);
    CHECK(cell(csv_cells(lg.out), 1, 3) ==
          Approx(2.07727840672726363).epsilon(1e-12));
}

TEST_CASE("escort families and the bell integral") {
    EnvGuard env;
    const CliResult q = run({"escort", "--family", "quantum", "--theta",
                             "1.0471975511965976"});
    REQUIRE(q.code == 0);
    CHECK(cell(csv_cells(q.out), 1, 1) == Approx(0.75).epsilon(1e-12));

    const CliResult c = run({"escort", "--family", "correspondence", "--a",
                             "0.5", "--p", "0.9", "--n-list", "3,10,100"});
    REQUIRE(c.code == 0);
    const auto crows = csv_cells(c.out);
    CHECK(crows[0] == std::vector<std::string>{"n", "g"});
    CHECK(cell(crows, 1, 1) == Approx(0.56).epsilon(1e-12));
    CHECK(cell(crows, 2, 1) == Approx(0.233333333333333333).epsilon(1e-12));
    CHECK(cell(crows, 3, 1) == Approx(0.0274509803921568627).epsilon(1e-12));

    const CliResult p =
        run({"escort", "--family", "power", "--dist", "0.3,0.7", "--q", "2"});
    REQUIRE(p.code == 0);
    const auto prows = csv_cells(p.out);
    CHECK(prows[0] == std::vector<std::string>{"k", "p", "escort"});
    CHECK(cell(prows, 1, 2) == Approx(0.155172413793103448).epsilon(1e-12));

    const CliResult b = run({"bell", "--alpha", "1.0471975511965976", "--beta",
                             "0"});
    REQUIRE(b.code == 0);
    const auto brows = csv_cells(b.out);
    CHECK(brows[0] == std::vector<std::string>{"alpha", "beta", "integral",
                                               "closed_form"});
    CHECK(cell(brows, 1, 2) == Approx(0.75).epsilon(1e-8));
    CHECK(cell(brows, 1, 3) == Approx(0.75).epsilon(1e-12));

    CHECK(run({"escort", "--family", "warp"}).code == 1);
    CHECK(run({"bell", "--alpha", "0", "--beta", "1"}).code == 2);
}

TEST_CASE("fig1 table format is pinned") {
    EnvGuard env;
    const CliResult r =
        run({"fig1", "--xmin", "10", "--xmax", "20", "--points", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("x,exp_k1_k0,exp_k1_k1\n", 0) == 0);
    CHECK(r.out.find('\r') == std::string::npos);
    const auto rows = csv_cells(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(cell(rows, 1, 1) == Approx(0.0498756211208902702).epsilon(1e-12));

    // values are printed with 15 significant digits
    const CliResult e = run({"explog", "--op", "exp", "--x", "1"});
    CHECK(e.out.find("2.71828182845905") != std::string::npos);
}

TEST_CASE("cosmo tables and the matched deformation rate") {
    EnvGuard env;
    const CliResult k = run({"cosmo", "--report-kappa"});
    REQUIRE(k.code == 0);
    CHECK(k.out == "1.2550\n");

    const CliResult d = run({"cosmo", "--points", "5"});
    REQUIRE(d.code == 0);
    const auto drows = csv_cells(d.out);
    CHECK(drows[0] == std::vector<std::string>{"t", "a_closed", "a_standard"});
    REQUIRE(drows.size() == 6);
    CHECK(cell(drows, 1, 0) == Approx(0.1).epsilon(1e-14));
    CHECK(cell(drows, 5, 0) == Approx(3.0).epsilon(1e-14));
    for (std::size_t i = 1; i < drows.size(); ++i) {
        CHECK(cell(drows, i, 1) == Approx(cell(drows, i, 2)).epsilon(1e-10));
    }

    const CliResult t = run({"cosmo", "--integrate-steps", "200"});
    REQUIRE(t.code == 0);
    const auto trows = csv_cells(t.out);
    CHECK(trows[0] == std::vector<std::string>{"t", "a_closed", "a_integrated",
                                               "a_standard"});
    REQUIRE(trows.size() == 202);
    CHECK(cell(trows, 201, 2) == Approx(cell(trows, 201, 1)).epsilon(1e-3));
}

TEST_CASE("output is deterministic and can be redirected to a file") {
    EnvGuard env;
    const std::vector<std::string> args = {"fig1", "--xmin", "0.5", "--xmax",
                                           "50", "--points", "40"};
    const CliResult a = run(args);
    const CliResult b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    const fs::path path = temp_file("nncalc-fig1");
    std::vector<std::string> redirected = args;
    redirected.insert(redirected.end(), {"--output", path.string()});
    const CliResult c = run(redirected);
    REQUIRE(c.code == 0);
    CHECK(c.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == a.out);
    fs::remove(path);

    CHECK(run({"fig1", "--output", "/nonexistent-dir/x.csv"}).code == 1);
}

TEST_CASE("config dump and restore round-trip exactly") {
    EnvGuard env;
    const CliResult dump = run({"knmean", "--gen", "log", "--dist", "0.25,0.75",
                                "--values", "2,8", "--deformed",
                                "--dump-config"});
    REQUIRE(dump.code == 0);
    REQUIRE(!dump.out.empty());
    std::string line = dump.out;
    REQUIRE(line.back() == '\n');
    line.pop_back();

    // canonical text is a fixed point of parse + serialize
    const RunConfig cfg = RunConfig::from_json_text(line);
    CHECK(cfg.canonical_json() == line);
    CHECK(cfg.subcommand == "knmean");
    CHECK(cfg.numbers.at("deformed") == 1.0);

    const fs::path path = temp_file("nncalc-config");
    {
        std::ofstream f(path, std::ios::binary);
        f << line;
    }
    const CliResult replay = run({"--config", path.string()});
    const CliResult direct = run({"knmean", "--gen", "log", "--dist",
                                  "0.25,0.75", "--values", "2,8",
                                  "--deformed"});
    REQUIRE(replay.code == 0);
    CHECK(replay.out == direct.out);
    fs::remove(path);
}

TEST_CASE("config failure modes") {
    EnvGuard env;
    CHECK(run({"--config", "/nonexistent/cfg.json"}).code == 1);

    const fs::path path = temp_file("nncalc-bad-config");
    const auto with_content = [&](const std::string& text) {
        std::ofstream f(path, std::ios::binary);
        f << text;
        f.close();
        return run({"--config", path.string()});
    };
    CHECK(with_content("{oops").code == 1);
    CHECK(with_content(R"({"format": "csv"})").code == 1);
    CHECK(with_content(R"({"subcommand": "arith", "mystery": 1})").code == 1);
    CHECK(with_content(R"({"subcommand": "arith", "seed": -3})").code == 1);
    fs::remove(path);

    const CliResult both = run({"--config", "whatever.json", "fig1"});
    CHECK(both.code == 1);
}

TEST_CASE("json output carries the same table") {
    EnvGuard env;
    const CliResult r = run({"fig1", "--xmin", "10", "--xmax", "20", "--points",
                             "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("columns"));
    REQUIRE(j.contains("rows"));
    CHECK(j["columns"] ==
          nlohmann::json({"x", "exp_k1_k0", "exp_k1_k1"}));
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0][1].get<double>() ==
          Approx(0.0498756211208902702).epsilon(1e-13));

    CHECK(run({"fig1", "--format", "xml"}).code == 1);
}

TEST_CASE("help text is shown on request and on empty input") {
    EnvGuard env;
    const CliResult top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("deformed-calculus") != std::string::npos);

    const CliResult sub = run({"arith", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--lhs") != std::string::npos);

    const CliResult none = run({});
    CHECK(none.code == 1);
    CHECK(!none.err.empty());
}

TEST_CASE("generator specs load from files") {
    EnvGuard env;
    const fs::path path = temp_file("nncalc-gen");
    {
        std::ofstream f(path, std::ios::binary);
        f << R"({"name": "renyi", "params": {"q": 2.0}})";
    }
    const CliResult r = run({"knmean", "--gen", path.string(), "--dist",
                             "0.3,0.7", "--values", "1,2"});
    REQUIRE(r.code == 0);
    CHECK(cell(csv_cells(r.out), 1, 0) ==
          Approx(1.58426477815637131).epsilon(1e-12));
    fs::remove(path);
}

TEST_CASE("seed environment variable wins over the flag") {
    EnvGuard env;
    setenv("NNCALC_SEED", "42", 1);
    const CliResult r = run({"selfcheck", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(seed 42)") != std::string::npos);
    CHECK(r.out.find(", 0 failed") != std::string::npos);

    setenv("NNCALC_SEED", "abc", 1);
    const CliResult bad = run({"selfcheck"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("NNCALC_SEED") != std::string::npos);
    unsetenv("NNCALC_SEED");
}
