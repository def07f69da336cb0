#include "cli.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "nncalc/arithmetic.hpp"
#include "nncalc/calculus.hpp"
#include "nncalc/cosmo.hpp"
#include "nncalc/errors.hpp"
#include "nncalc/escort.hpp"
#include "nncalc/kappa.hpp"
#include "nncalc/selfcheck.hpp"
#include "nncalc/statmech.hpp"
#include "nncalc/table.hpp"

namespace nncalc::cli {

namespace {

using nlohmann::json;

// Flag combinations and config-shape problems, kept apart from numeric and
// domain failures so the exit codes stay honest: 1 vs 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double num(const RunConfig& cfg, const std::string& key) {
    const auto it = cfg.numbers.find(key);
    if (it == cfg.numbers.end()) {
        throw UsageError("missing numeric parameter '" + key + "'");
    }
    return it->second;
}

double num_or(const RunConfig& cfg, const std::string& key, double dflt) {
    const auto it = cfg.numbers.find(key);
    return it == cfg.numbers.end() ? dflt : it->second;
}

std::string str_or(const RunConfig& cfg, const std::string& key,
                   const std::string& dflt) {
    const auto it = cfg.strings.find(key);
    return it == cfg.strings.end() || it->second.empty() ? dflt : it->second;
}

std::string str(const RunConfig& cfg, const std::string& key) {
    const std::string v = str_or(cfg, key, "");
    if (v.empty()) throw UsageError("missing parameter '" + key + "'");
    return v;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ',')) {
        const auto a = token.find_first_not_of(" \t");
        const auto b = token.find_last_not_of(" \t");
        if (a == std::string::npos) {
            throw UsageError(std::string(what) + ": empty entry in list");
        }
        token = token.substr(a, b - a + 1);
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != token.size()) {
            throw UsageError(std::string(what) + ": cannot parse '" + token +
                             "' as a number");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw UsageError(std::string(what) + ": empty list");
    }
    return out;
}

// A generator spec is either the content of the named file (when one exists)
// or the spec itself: a catalog name or a JSON object.
Generator resolve_generator(const std::string& spec) {
    try {
        std::ifstream f(spec);
        if (f.good()) {
            std::ostringstream buf;
            buf << f.rdbuf();
            return generator_from_config(buf.str());
        }
        return generator_from_config(spec);
    } catch (const InvalidParam& e) {
        // the spec is typed by the user, so a bad one is a usage problem
        throw UsageError(e.what());
    }
}

std::function<double(double)> named_map(const std::string& name) {
    if (name == "identity") return [](double x) { return x; };
    if (name == "square") return [](double x) { return x * x; };
    if (name == "cube") return [](double x) { return x * x * x; };
    if (name == "exp") return [](double x) { return std::exp(x); };
    if (name == "sin") return [](double x) { return std::sin(x); };
    if (name == "recip") return [](double x) { return 1.0 / x; };
    throw UsageError("unknown map '" + name +
                     "' (have: identity, square, cube, exp, sin, recip)");
}

void write_text(const RunConfig& cfg, const std::string& text,
                std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + cfg.output + "'");
    f << text;
    if (!f.good()) {
        throw UsageError("failed writing output file '" + cfg.output + "'");
    }
}

void emit(const RunConfig& cfg, const Table& t, std::ostream& out) {
    std::ostringstream buf;
    if (cfg.format == "json") {
        json j;
        j["columns"] = t.columns;
        j["rows"] = t.rows;
        buf << j.dump(2) << "\n";
    } else {
        write_csv(buf, t);
    }
    write_text(cfg, buf.str(), out);
}

int cmd_arith(const RunConfig& cfg, std::ostream& out) {
    const std::string op = str(cfg, "op");
    const Arithmetic target{resolve_generator(str_or(cfg, "gen", "identity"))};
    const std::string lhs_gen = str_or(cfg, "lhs-gen", "");
    const std::string rhs_gen = str_or(cfg, "rhs-gen", "");
    const double lhs = num(cfg, "lhs");

    if (op == "neg") {
        if (!lhs_gen.empty() || !rhs_gen.empty()) {
            throw UsageError("neg takes no per-operand generators");
        }
        emit(cfg, {{"operand", "result"}, {{lhs, target.neg(lhs)}}}, out);
        return 0;
    }

    const double rhs = num(cfg, "rhs");
    double result = 0.0;
    if (op == "add" || op == "mul") {
        const Arithmetic a1 = lhs_gen.empty()
                                  ? target
                                  : Arithmetic{resolve_generator(lhs_gen)};
        const Arithmetic a2 = rhs_gen.empty()
                                  ? target
                                  : Arithmetic{resolve_generator(rhs_gen)};
        result = op == "add" ? mixed_add(target, a1, lhs, a2, rhs)
                             : mixed_mul(target, a1, lhs, a2, rhs);
    } else if (op == "sub" || op == "div") {
        if (!lhs_gen.empty() || !rhs_gen.empty()) {
            throw UsageError("--lhs-gen/--rhs-gen only combine with add/mul");
        }
        result = op == "sub" ? target.ominus(lhs, rhs)
                             : target.oslash(lhs, rhs);
    } else {
        throw UsageError("unknown op '" + op +
                         "' (have: add, sub, mul, div, neg)");
    }
    emit(cfg, {{"lhs", "rhs", "result"}, {{lhs, rhs, result}}}, out);
    return 0;
}

NNFunction configured_map(const RunConfig& cfg) {
    const Arithmetic X{resolve_generator(str_or(cfg, "genx", "identity"))};
    const Arithmetic Y{resolve_generator(str_or(cfg, "geny", "identity"))};
    return {X, Y, named_map(str_or(cfg, "fn", "identity"))};
}

int cmd_derive(const RunConfig& cfg, std::ostream& out) {
    const NNFunction fn = configured_map(cfg);
    const double x = num(cfg, "x");
    const double d = nn_derivative(fn, x, num_or(cfg, "step", 0.0));
    emit(cfg, {{"x", "derivative"}, {{x, d}}}, out);
    return 0;
}

int cmd_integrate(const RunConfig& cfg, std::ostream& out) {
    const NNFunction fn = configured_map(cfg);
    const double lo = num(cfg, "lo");
    const double hi = num(cfg, "hi");
    const double v = nn_integral(fn, lo, hi, num_or(cfg, "tol", 1e-10));
    emit(cfg, {{"lo", "hi", "integral"}, {{lo, hi, v}}}, out);
    return 0;
}

int cmd_explog(const RunConfig& cfg, std::ostream& out) {
    const Arithmetic X{resolve_generator(str_or(cfg, "genx", "identity"))};
    const Arithmetic Y{resolve_generator(str_or(cfg, "geny", "identity"))};
    const std::string op = str_or(cfg, "op", "exp");
    const double x = num(cfg, "x");
    double v = 0.0;
    if (op == "exp") {
        v = nn_exp(X, Y, x);
    } else if (op == "ln") {
        v = nn_ln(X, Y, x);
    } else {
        throw UsageError("unknown op '" + op + "' (have: exp, ln)");
    }
    emit(cfg, {{"x", "result"}, {{x, v}}}, out);
    return 0;
}

int cmd_fig1(const RunConfig& cfg, std::ostream& out) {
    const Table t = fig1_table(num_or(cfg, "xmin", 0.01),
                               num_or(cfg, "xmax", 10000.0),
                               static_cast<int>(num_or(cfg, "points", 200.0)),
                               num_or(cfg, "kappa", 1.0));
    emit(cfg, t, out);
    return 0;
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out) {
    const ProbabilityVector p(parse_list(str(cfg, "dist"), "dist"));
    const double q = num_or(cfg, "q", 1.0);
    emit(cfg,
         {{"q", "shannon", "renyi"},
          {{q, shannon_entropy(p), renyi_entropy(p, q)}}},
         out);
    return 0;
}

int cmd_knmean(const RunConfig& cfg, std::ostream& out) {
    const Generator f = resolve_generator(str_or(cfg, "gen", "identity"));
    const ProbabilityVector p(parse_list(str(cfg, "dist"), "dist"));
    const std::vector<double> a = parse_list(str(cfg, "values"), "values");
    const double m = kn_mean(f, p, a);
    if (num_or(cfg, "deformed", 0.0) != 0.0) {
        const double md = kn_mean_deformed(Arithmetic{f}, p, a);
        emit(cfg, {{"mean", "mean_deformed"}, {{m, md}}}, out);
    } else {
        emit(cfg, {{"mean"}, {{m}}}, out);
    }
    return 0;
}

int cmd_maxent(const RunConfig& cfg, std::ostream& out) {
    const Arithmetic X{resolve_generator(str_or(cfg, "genx", "identity"))};
    const Arithmetic E{resolve_generator(str_or(cfg, "gene", "identity"))};
    const std::vector<double> levels = parse_list(str(cfg, "levels"), "levels");
    const MaxEntSolution sol =
        maxent_solve(X, EnergySpectrum{levels, E}, num(cfg, "beta"));
    Table t;
    t.columns = {"k", "energy", "u", "p", "alpha", "residual"};
    for (std::size_t k = 0; k < levels.size(); ++k) {
        t.rows.push_back({static_cast<double>(k), levels[k],
                          X.to_conjugate(sol.p[k]), sol.p[k], sol.alpha,
                          sol.stationarity_residual});
    }
    emit(cfg, t, out);
    return 0;
}

int cmd_escort(const RunConfig& cfg, std::ostream& out) {
    const std::string family = str_or(cfg, "family", "affine");
    if (family == "affine") {
        const double p = num_or(cfg, "p", 0.5);
        const double g =
            escort_affine(num_or(cfg, "a", 0.5), num_or(cfg, "n", 4.0), p);
        emit(cfg, {{"p", "g"}, {{p, g}}}, out);
    } else if (family == "spin") {
        const double p = num_or(cfg, "p", 0.5);
        if (p < 0.0 || p > 1.0) {
            throw DomainViolation("spin escort needs p in [0, 1]");
        }
        emit(cfg, {{"p", "g"}, {{p, SpinBijection::forward(p)}}}, out);
    } else if (family == "quantum") {
        const double theta = num_or(cfg, "theta", 1.5707963267948966);
        emit(cfg, {{"theta", "g"}, {{theta, quantum_conditional(theta)}}}, out);
    } else if (family == "power") {
        const ProbabilityVector p(parse_list(str(cfg, "dist"), "dist"));
        const ProbabilityVector e = escort_renormalized(p, num_or(cfg, "q", 2.0));
        Table t;
        t.columns = {"k", "p", "escort"};
        for (std::size_t k = 0; k < p.size(); ++k) {
            t.rows.push_back({static_cast<double>(k), p[k], e[k]});
        }
        emit(cfg, t, out);
    } else if (family == "correspondence") {
        const std::vector<double> ns =
            parse_list(str_or(cfg, "n-list", "4,6,8,12,20,50"), "n-list");
        emit(cfg,
             correspondence_limit(num_or(cfg, "a", 0.5), num_or(cfg, "p", 0.5),
                                  ns),
             out);
    } else {
        throw UsageError("unknown family '" + family +
                         "' (have: affine, spin, quantum, power, "
                         "correspondence)");
    }
    return 0;
}

int cmd_bell(const RunConfig& cfg, std::ostream& out) {
    const double alpha = num(cfg, "alpha");
    const double beta = num(cfg, "beta");
    const double v =
        hidden_variable_integral(alpha, beta, num_or(cfg, "tol", 1e-10));
    const double closed = quantum_conditional(alpha - beta);
    emit(cfg,
         {{"alpha", "beta", "integral", "closed_form"},
          {{alpha, beta, v, closed}}},
         out);
    return 0;
}

int cmd_cosmo(const RunConfig& cfg, std::ostream& out) {
    CosmologyParams P;
    P.omega_m = num_or(cfg, "omega-m", 0.3);
    P.omega_lambda = num_or(cfg, "omega-lambda", 0.7);
    P.omega = num_or(cfg, "omega", 0.3);
    const MatchedFriedmann mf = matched_generator(P);

    if (num_or(cfg, "report-kappa", 0.0) != 0.0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f\n", mf.kappa);
        write_text(cfg, buf, out);
        return 0;
    }

    const Arithmetic X{mf.gen};
    const double tmin = num_or(cfg, "tmin", 0.1);
    const double tmax = num_or(cfg, "tmax", 3.0);
    const int steps = static_cast<int>(num_or(cfg, "integrate-steps", 0.0));
    if (steps > 0) {
        const Trajectory traj =
            nn_friedmann_integrate(tmin, tmax, P.omega, X, steps);
        Table t;
        t.columns = {"t", "a_closed", "a_integrated", "a_standard"};
        for (std::size_t i = 0; i < traj.t.size(); ++i) {
            const double tt = traj.t[i];
            t.rows.push_back({tt, nn_friedmann_scale_factor(tt, P.omega, X),
                              traj.a[i], friedmann_scale_factor(tt, P)});
        }
        emit(cfg, t, out);
        return 0;
    }

    const int points = static_cast<int>(num_or(cfg, "points", 50.0));
    if (points < 2) throw UsageError("need at least 2 points");
    Table t;
    t.columns = {"t", "a_closed", "a_standard"};
    for (int i = 0; i < points; ++i) {
        const double tt = tmin + (tmax - tmin) * i / (points - 1);
        t.rows.push_back({tt, nn_friedmann_scale_factor(tt, P.omega, X),
                          friedmann_scale_factor(tt, P)});
    }
    emit(cfg, t, out);
    return 0;
}

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out) {
    std::ostringstream buf;
    const SelfCheckReport rep = run_selfcheck(cfg.seed, buf);
    buf << "selfcheck: " << rep.passed << " passed, " << rep.failed
        << " failed (seed " << cfg.seed << ")\n";
    write_text(cfg, buf.str(), out);
    return rep.ok() ? 0 : 2;
}

int execute(RunConfig cfg, std::ostream& out) {
    if (const char* env = std::getenv("NNCALC_SEED")) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(env, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || env[pos] != '\0') {
            throw UsageError(std::string("NNCALC_SEED is not an integer: '") +
                             env + "'");
        }
        cfg.seed = v;
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        throw UsageError("format must be csv or json, got '" + cfg.format +
                         "'");
    }

    if (cfg.subcommand == "arith") return cmd_arith(cfg, out);
    if (cfg.subcommand == "derive") return cmd_derive(cfg, out);
    if (cfg.subcommand == "integrate") return cmd_integrate(cfg, out);
    if (cfg.subcommand == "explog") return cmd_explog(cfg, out);
    if (cfg.subcommand == "fig1") return cmd_fig1(cfg, out);
    if (cfg.subcommand == "entropy") return cmd_entropy(cfg, out);
    if (cfg.subcommand == "knmean") return cmd_knmean(cfg, out);
    if (cfg.subcommand == "maxent") return cmd_maxent(cfg, out);
    if (cfg.subcommand == "escort") return cmd_escort(cfg, out);
    if (cfg.subcommand == "bell") return cmd_bell(cfg, out);
    if (cfg.subcommand == "cosmo") return cmd_cosmo(cfg, out);
    if (cfg.subcommand == "selfcheck") return cmd_selfcheck(cfg, out);
    throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
}

void bind_num(CLI::App* sub, RunConfig& cfg, const std::string& key,
              const std::string& flag, double dflt, const std::string& help) {
    cfg.numbers[key] = dflt;
    sub->add_option(flag, cfg.numbers[key], help)->capture_default_str();
}

void bind_str(CLI::App* sub, RunConfig& cfg, const std::string& key,
              const std::string& flag, const std::string& dflt,
              const std::string& help) {
    cfg.strings[key] = dflt;
    auto* opt = sub->add_option(flag, cfg.strings[key], help);
    if (!dflt.empty()) opt->capture_default_str();
}

void add_common(CLI::App* sub, RunConfig& cfg, bool& dump) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", cfg.output, "write to a file instead of stdout");
    sub->add_option("--seed", cfg.seed,
                    "RNG seed; the NNCALC_SEED environment variable wins")
        ->capture_default_str();
    sub->add_flag("--dump-config", dump,
                  "print the canonical config JSON and exit");
}

}  // namespace

std::string RunConfig::canonical_json() const {
    json j;
    j["subcommand"] = subcommand;
    j["format"] = format;
    j["output"] = output;
    j["seed"] = seed;
    j["strings"] = strings;
    j["numbers"] = numbers;
    return j.dump();
}

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "subcommand" || key == "format" || key == "output") {
            if (!value.is_string()) {
                throw UsageError("config key '" + key + "' must be a string");
            }
            (key == "subcommand" ? cfg.subcommand
             : key == "format"   ? cfg.format
                                 : cfg.output) = value.get<std::string>();
        } else if (key == "seed") {
            if (!value.is_number_integer() || value.get<double>() < 0) {
                throw UsageError("config key 'seed' must be a nonnegative "
                                 "integer");
            }
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "strings") {
            if (!value.is_object()) {
                throw UsageError("config key 'strings' must be an object");
            }
            for (const auto& [k, v] : value.items()) {
                if (!v.is_string()) {
                    throw UsageError("config strings entry '" + k +
                                     "' must be a string");
                }
                cfg.strings[k] = v.get<std::string>();
            }
        } else if (key == "numbers") {
            if (!value.is_object()) {
                throw UsageError("config key 'numbers' must be an object");
            }
            for (const auto& [k, v] : value.items()) {
                if (!v.is_number()) {
                    throw UsageError("config numbers entry '" + k +
                                     "' must be a number");
                }
                cfg.numbers[k] = v.get<double>();
            }
        } else {
            throw UsageError("unknown config key '" + key + "'");
        }
    }
    if (cfg.subcommand.empty()) {
        throw UsageError("config must name a subcommand");
    }
    return cfg;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"generated-arithmetic and deformed-calculus toolkit"};
    app.require_subcommand(0, 1);
    std::string config_path;
    bool dump = false;
    bool knmean_deformed = false;
    bool cosmo_report_kappa = false;
    app.add_option("--config", config_path,
                   "run from a canonical config JSON file (no subcommand)");
    app.add_flag("--dump-config", dump,
                 "print the canonical config JSON and exit");

    std::map<std::string, RunConfig> cfgs;
    const auto make_sub = [&](const std::string& name,
                              const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        RunConfig& cfg = cfgs[name];
        cfg.subcommand = name;
        add_common(sub, cfg, dump);
        return sub;
    };

    {
        CLI::App* sub = make_sub(
            "arith", "evaluate one generated-arithmetic operation, optionally "
                     "with per-operand generators");
        RunConfig& cfg = cfgs["arith"];
        bind_str(sub, cfg, "gen", "--gen", "identity",
                 "target generator (name, JSON spec, or file)");
        bind_str(sub, cfg, "lhs-gen", "--lhs-gen", "",
                 "generator of the left operand (add/mul only)");
        bind_str(sub, cfg, "rhs-gen", "--rhs-gen", "",
                 "generator of the right operand (add/mul only)");
        bind_str(sub, cfg, "op", "--op", "", "add | sub | mul | div | neg");
        sub->get_option("--op")->required();
        bind_num(sub, cfg, "lhs", "--lhs", 0.0, "left operand");
        sub->get_option("--lhs")->required();
        bind_num(sub, cfg, "rhs", "--rhs", 0.0,
                 "right operand (all ops except neg)");
    }
    {
        CLI::App* sub = make_sub(
            "derive",
            "deformed derivative of a named map between two arithmetics");
        RunConfig& cfg = cfgs["derive"];
        bind_str(sub, cfg, "genx", "--genx", "identity", "domain generator");
        bind_str(sub, cfg, "geny", "--geny", "identity", "codomain generator");
        bind_str(sub, cfg, "fn", "--fn", "identity",
                 "map to differentiate (identity, square, cube, exp, sin, "
                 "recip)");
        bind_num(sub, cfg, "x", "--x", 0.0, "evaluation point");
        sub->get_option("--x")->required();
        bind_num(sub, cfg, "step", "--step", 0.0,
                 "difference step (0 = automatic)");
    }
    {
        CLI::App* sub = make_sub(
            "integrate", "deformed definite integral of a named map");
        RunConfig& cfg = cfgs["integrate"];
        bind_str(sub, cfg, "genx", "--genx", "identity", "domain generator");
        bind_str(sub, cfg, "geny", "--geny", "identity", "codomain generator");
        bind_str(sub, cfg, "fn", "--fn", "identity",
                 "integrand (identity, square, cube, exp, sin, recip)");
        bind_num(sub, cfg, "lo", "--lo", 0.0, "lower bound");
        sub->get_option("--lo")->required();
        bind_num(sub, cfg, "hi", "--hi", 0.0, "upper bound");
        sub->get_option("--hi")->required();
        bind_num(sub, cfg, "tol", "--tol", 1e-10, "quadrature tolerance");
    }
    {
        CLI::App* sub = make_sub(
            "explog",
            "deformed exponential between two arithmetics, and its inverse");
        RunConfig& cfg = cfgs["explog"];
        bind_str(sub, cfg, "genx", "--genx", "identity", "domain generator");
        bind_str(sub, cfg, "geny", "--geny", "identity", "codomain generator");
        bind_str(sub, cfg, "op", "--op", "exp", "exp | ln");
        bind_num(sub, cfg, "x", "--x", 0.0, "argument");
        sub->get_option("--x")->required();
    }
    {
        CLI::App* sub = make_sub(
            "fig1", "log-spaced table of the two deformed exponential "
                    "conventions at -x; their tails coincide for large x");
        RunConfig& cfg = cfgs["fig1"];
        bind_num(sub, cfg, "kappa", "--kappa", 1.0, "deformation strength");
        bind_num(sub, cfg, "xmin", "--xmin", 0.01, "smallest x (> 0)");
        bind_num(sub, cfg, "xmax", "--xmax", 10000.0, "largest x");
        bind_num(sub, cfg, "points", "--points", 200.0, "sample count");
    }
    {
        CLI::App* sub = make_sub(
            "entropy", "Shannon and Renyi entropies of a distribution");
        RunConfig& cfg = cfgs["entropy"];
        bind_str(sub, cfg, "dist", "--dist", "",
                 "comma-separated probabilities summing to 1");
        sub->get_option("--dist")->required();
        bind_num(sub, cfg, "q", "--q", 1.0, "Renyi order");
    }
    {
        CLI::App* sub = make_sub(
            "knmean",
            "quasi-arithmetic mean of values under a generator, with an "
            "optional second route through the induced arithmetic");
        RunConfig& cfg = cfgs["knmean"];
        bind_str(sub, cfg, "gen", "--gen", "identity", "mean generator");
        bind_str(sub, cfg, "dist", "--dist", "",
                 "comma-separated probabilities summing to 1");
        sub->get_option("--dist")->required();
        bind_str(sub, cfg, "values", "--values", "",
                 "comma-separated values to average");
        sub->get_option("--values")->required();
        cfg.numbers["deformed"] = 0.0;
        sub->add_flag("--deformed", knmean_deformed,
                      "also evaluate through deformed weights");
    }
    {
        CLI::App* sub = make_sub(
            "maxent", "closed-form maximum-entropy distribution over "
                      "conjugate weights");
        RunConfig& cfg = cfgs["maxent"];
        bind_str(sub, cfg, "genx", "--genx", "identity",
                 "probability generator");
        bind_str(sub, cfg, "gene", "--gene", "identity", "energy generator");
        bind_str(sub, cfg, "levels", "--levels", "",
                 "comma-separated energy levels");
        sub->get_option("--levels")->required();
        bind_num(sub, cfg, "beta", "--beta", 1.0, "inverse temperature");
        sub->get_option("--beta")->required();
    }
    {
        CLI::App* sub = make_sub(
            "escort", "escort probability families (affine, spin, quantum, "
                      "power, correspondence)");
        RunConfig& cfg = cfgs["escort"];
        bind_str(sub, cfg, "family", "--family", "affine", "family to use");
        sub->get_option("--family")
            ->check(CLI::IsMember(
                {"affine", "spin", "quantum", "power", "correspondence"}));
        bind_num(sub, cfg, "a", "--a", 0.5, "affine slope in [-1, 1]");
        bind_num(sub, cfg, "n", "--n", 4.0, "number of outcomes (>= 3)");
        bind_num(sub, cfg, "p", "--p", 0.5, "probability argument");
        bind_num(sub, cfg, "theta", "--theta", 1.5707963267948966,
                 "relative angle in [0, pi] (quantum family)");
        bind_num(sub, cfg, "q", "--q", 2.0, "power-family exponent");
        bind_str(sub, cfg, "dist", "--dist", "",
                 "comma-separated probabilities (power family)");
        bind_str(sub, cfg, "n-list", "--n-list", "4,6,8,12,20,50",
                 "outcome counts for the correspondence table");
    }
    {
        CLI::App* sub = make_sub(
            "bell", "hidden-variable average of the spin escort against the "
                    "closed-form conditional law");
        RunConfig& cfg = cfgs["bell"];
        bind_num(sub, cfg, "alpha", "--alpha", 0.0, "first angle");
        sub->get_option("--alpha")->required();
        bind_num(sub, cfg, "beta", "--beta", 0.0, "second angle");
        sub->get_option("--beta")->required();
        bind_num(sub, cfg, "tol", "--tol", 1e-10, "quadrature tolerance");
    }
    {
        CLI::App* sub = make_sub(
            "cosmo", "scale-factor tables for the standard and deformed "
                     "descriptions, plus the matched deformation rate");
        RunConfig& cfg = cfgs["cosmo"];
        bind_num(sub, cfg, "omega-m", "--omega-m", 0.3, "matter density");
        bind_num(sub, cfg, "omega-lambda", "--omega-lambda", 0.7,
                 "vacuum density");
        bind_num(sub, cfg, "omega", "--omega", 0.3,
                 "density felt by the deformed description");
        bind_num(sub, cfg, "tmin", "--tmin", 0.1, "first sample time (> 0)");
        bind_num(sub, cfg, "tmax", "--tmax", 3.0, "last sample time");
        bind_num(sub, cfg, "points", "--points", 50.0, "closed-form samples");
        bind_num(sub, cfg, "integrate-steps", "--integrate-steps", 0.0,
                 "integrate the expansion rate with this many RK4 steps "
                 "instead of tabulating closed forms");
        cfg.numbers["report-kappa"] = 0.0;
        sub->add_flag("--report-kappa", cosmo_report_kappa,
                      "print only the matched deformation rate");
    }
    {
        make_sub("selfcheck",
                 "run the built-in invariant suite and report pass/fail "
                 "counts");
    }

    CLI::App* arith_sub = app.get_subcommand("arith");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    cfgs["knmean"].numbers["deformed"] = knmean_deformed ? 1.0 : 0.0;
    cfgs["cosmo"].numbers["report-kappa"] = cosmo_report_kappa ? 1.0 : 0.0;

    try {
        RunConfig cfg;
        const std::vector<CLI::App*> picked = app.get_subcommands();
        if (!picked.empty()) {
            if (!config_path.empty()) {
                throw UsageError(
                    "--config cannot be combined with a subcommand");
            }
            const std::string name = picked.front()->get_name();
            cfg = cfgs.at(name);
            // unsupplied conditional operand: leave the key out so handlers
            // report it as missing instead of silently using 0
            if (name == "arith" &&
                arith_sub->get_option("--rhs")->count() == 0) {
                cfg.numbers.erase("rhs");
            }
        } else if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) {
                throw UsageError("cannot read config file '" + config_path +
                                 "'");
            }
            std::ostringstream buf;
            buf << f.rdbuf();
            cfg = RunConfig::from_json_text(buf.str());
        } else {
            err << app.help();
            return 1;
        }
        if (dump) {
            out << cfg.canonical_json() << "\n";
            return 0;
        }
        return execute(std::move(cfg), out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace nncalc::cli
