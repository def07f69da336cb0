#include "nncalc/selfcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "nncalc/arithmetic.hpp"
#include "nncalc/calculus.hpp"
#include "nncalc/cosmo.hpp"
#include "nncalc/errors.hpp"
#include "nncalc/escort.hpp"
#include "nncalc/kappa.hpp"
#include "nncalc/statmech.hpp"

namespace nncalc {

namespace {

bool close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

// conjugate-space sampling window that is safe for sums and products of
// three operands under every catalog generator
Interval sample_window(const Generator& g) {
    if (g.range.lo_open && g.range.lo == 0.0) return Interval::closed(0.2, 1.2);
    return Interval::closed(-1.5, 1.5);
}

struct Sampler {
    std::mt19937_64 rng;
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    double in(const Interval& w) { return uniform(w.lo, w.hi); }
};

// increasing positive cubic in conjugate space; keeps every derived quantity
// (values, derivatives, products, integrals) inside (0, inf) so the whole
// generator pool can host it
struct ConjugateCubic {
    double c0, c1, c2, c3;
    double operator()(double r) const {
        return c0 + r * (c1 + r * (c2 + r * c3));
    }
    double derivative(double r) const { return c1 + r * (2.0 * c2 + 3.0 * c3 * r); }
};

ConjugateCubic random_cubic(Sampler& s) {
    return {s.uniform(4.0, 5.0), s.uniform(0.5, 1.5), s.uniform(0.0, 0.5),
            s.uniform(0.0, 0.5)};
}

NNFunction lift(const Arithmetic& X, const Arithmetic& Y,
                const ConjugateCubic& c) {
    return {X, Y, [&X, &Y, c](double x) {
                return Y.from_conjugate(c(X.to_conjugate(x)));
            }};
}

}  // namespace

SelfCheckReport run_selfcheck(std::uint64_t seed, std::ostream& log) {
    SelfCheckReport report;
    Sampler s{std::mt19937_64(seed)};

    const auto check = [&](const std::string& name, bool ok,
                           const std::string& detail = "") {
        if (ok) {
            ++report.passed;
            log << "ok   " << name << "\n";
        } else {
            ++report.failed;
            report.failures.push_back(name);
            log << "FAIL " << name << (detail.empty() ? "" : " - " + detail)
                << "\n";
        }
    };
    const auto guarded = [&](const std::string& name,
                             const std::function<bool()>& body) {
        try {
            check(name, body());
        } catch (const Error& e) {
            check(name, false, e.what());
        }
    };

    std::vector<Generator> pool;
    pool.push_back(identity_generator());
    pool.push_back(log_generator());
    pool.push_back(neglog_generator());
    pool.push_back(kaniadakis_generator(0.8));
    pool.push_back(kaniadakis_generator(2.0));
    pool.push_back(renyi_generator(0.5));
    pool.push_back(renyi_generator(3.0));
    pool.push_back(lemma2_generator(0.5, 4.0));
    pool.push_back(spin_generator());

    for (const auto& g : pool) {
        guarded("generator " + g.label + ": round trip and monotonicity",
                [&] {
                    validate(g);
                    return true;
                });
    }

    for (const auto& g : pool) {
        guarded("arithmetic " + g.label + ": field axioms on random triples",
                [&] {
                    const Arithmetic A{g};
                    const Interval w = sample_window(g);
                    for (int i = 0; i < 60; ++i) {
                        const double x = A.from_conjugate(s.in(w));
                        const double y = A.from_conjugate(s.in(w));
                        const double z = A.from_conjugate(s.in(w));
                        if (!close(A.oplus(x, y), A.oplus(y, x), 1e-9)) return false;
                        if (!close(A.oplus(A.oplus(x, y), z),
                                   A.oplus(x, A.oplus(y, z)), 1e-9))
                            return false;
                        if (!close(A.odot(x, A.oplus(y, z)),
                                   A.oplus(A.odot(x, y), A.odot(x, z)), 1e-9))
                            return false;
                        if (!close(g.forward(A.oplus(x, y)),
                                   g.forward(x) + g.forward(y), 1e-10))
                            return false;
                    }
                    return true;
                });
    }

    guarded("arithmetic: neutral elements where defined", [&] {
        for (const auto& g : pool) {
            const Arithmetic A{g};
            const Interval w = sample_window(g);
            for (int i = 0; i < 20; ++i) {
                const double x = A.from_conjugate(s.in(w));
                if (!close(A.odot(x, A.one()), x, 1e-10)) return false;
                if (g.range.contains(0.0) &&
                    !close(A.oplus(x, A.zero()), x, 1e-10))
                    return false;
            }
        }
        return true;
    });

    guarded("arithmetic: mixed operations reduce to the plain ones", [&] {
        const Arithmetic X{log_generator()}, Y{neglog_generator()};
        for (int i = 0; i < 30; ++i) {
            const double x = X.from_conjugate(s.uniform(-1.0, 1.0));
            const double y = X.from_conjugate(s.uniform(-1.0, 1.0));
            if (!close(mixed_add(X, X, x, X, y), X.oplus(x, y), 1e-12))
                return false;
            const double v = Y.from_conjugate(s.uniform(-1.0, 1.0));
            if (!close(mixed_mul(Y, Y, v, Y, v), Y.odot(v, v), 1e-12))
                return false;
        }
        return true;
    });

    const std::array<Generator, 4> xs = {identity_generator(), log_generator(),
                                         kaniadakis_generator(0.8),
                                         renyi_generator(0.5)};
    const std::array<Generator, 4> ys = {identity_generator(), log_generator(),
                                         kaniadakis_generator(1.2),
                                         renyi_generator(2.0)};

    guarded("calculus: embedded generator has derivative one", [&] {
        for (const auto& gx : xs) {
            const Arithmetic X{gx}, R{identity_generator()};
            const NNFunction f{X, R, gx.forward};
            const NNFunction finv{R, X, gx.inverse};
            const double r = s.uniform(0.4, 0.9);
            if (!close(nn_derivative(f, X.from_conjugate(r)), 1.0, 1e-8))
                return false;
            if (!close(nn_derivative(finv, r), X.one(), 1e-8)) return false;
        }
        return true;
    });

    guarded("calculus: Leibniz rule and additivity of the derivative", [&] {
        for (int i = 0; i < 12; ++i) {
            const Arithmetic X{xs[i % xs.size()]}, Y{ys[(i / 2) % ys.size()]};
            const ConjugateCubic ca = random_cubic(s), cb = random_cubic(s);
            const NNFunction A = lift(X, Y, ca), B = lift(X, Y, cb);
            const NNFunction sum{X, Y, [&](double x) {
                                     return Y.oplus(A.map(x), B.map(x));
                                 }};
            const NNFunction prod{X, Y, [&](double x) {
                                      return Y.odot(A.map(x), B.map(x));
                                  }};
            const double x = X.from_conjugate(s.uniform(0.3, 0.8));
            const double da = nn_derivative(A, x), db = nn_derivative(B, x);
            if (!close(nn_derivative(sum, x), Y.oplus(da, db), 1e-6))
                return false;
            const double leib = Y.oplus(Y.odot(da, B.map(x)),
                                        Y.odot(A.map(x), db));
            if (!close(nn_derivative(prod, x), leib, 1e-6)) return false;
        }
        return true;
    });

    guarded("calculus: fundamental theorem, both directions", [&] {
        for (int i = 0; i < 6; ++i) {
            const Arithmetic X{xs[i % xs.size()]}, Y{ys[i % ys.size()]};
            const ConjugateCubic c = random_cubic(s);
            const NNFunction A = lift(X, Y, c);
            const double x0 = X.from_conjugate(0.3);
            const double x1 = X.from_conjugate(s.uniform(0.6, 1.0));
            const NNFunction G{X, Y, [&](double x) {
                                   return nn_integral(A, x0, x, 1e-12);
                               }};
            if (!close(nn_derivative(G, x1), A.map(x1), 1e-6)) return false;
            const NNFunction dA{X, Y, [&](double x) {
                                    return nn_derivative(A, x);
                                }};
            const double lhs = nn_integral(dA, x0, x1, 1e-10);
            if (!close(lhs, Y.ominus(A.map(x1), A.map(x0)), 1e-6)) return false;
        }
        return true;
    });

    guarded("calculus: exponential/logarithm homomorphisms", [&] {
        for (int i = 0; i < 10; ++i) {
            const Arithmetic X{xs[i % xs.size()]}, Y{ys[i % ys.size()]};
            const Interval w = sample_window(X.gen());
            const double x = X.from_conjugate(s.in(w));
            const double y = X.from_conjugate(s.in(w));
            const double lhs = nn_exp(X, Y, X.oplus(x, y));
            const double rhs = Y.odot(nn_exp(X, Y, x), nn_exp(X, Y, y));
            if (!close(lhs, rhs, 1e-9)) return false;
            if (!close(nn_ln(X, Y, nn_exp(X, Y, x)), x, 1e-9)) return false;
        }
        return true;
    });

    guarded("kappa: deformed derivative agrees with the generic route", [&] {
        const auto A = [](double x) { return x * x * x - 2.0 * x; };
        for (double kappa : {0.5, 1.0, 2.0}) {
            const Arithmetic X{kaniadakis_generator(kappa)},
                R{identity_generator()};
            const NNFunction fn{X, R, A};
            for (int i = 0; i < 10; ++i) {
                const double x = s.uniform(-3.0, 3.0);
                if (!close(kappa_derivative(A, x, kappa),
                           nn_derivative(fn, x), 1e-6))
                    return false;
            }
        }
        return true;
    });

    guarded("kappa: dual quotient sends the deformed log to 1/y", [&] {
        for (int i = 0; i < 10; ++i) {
            const double kappa = s.uniform(0.3, 2.0);
            const double y = s.uniform(0.3, 4.0);
            const auto ln = [kappa](double t) { return kappa_ln(t, kappa); };
            if (!close(kappa_dual_derivative(ln, y, kappa), 1.0 / y, 1e-6))
                return false;
        }
        return true;
    });

    guarded("statmech: weighted mean stays between min and max", [&] {
        for (const auto& g : {log_generator(), renyi_generator(0.5),
                              kaniadakis_generator(1.0)}) {
            for (int i = 0; i < 20; ++i) {
                std::vector<double> p = {0.0, 0.0, 0.0}, a(3);
                double sum = 0.0;
                for (auto& v : p) sum += (v = s.uniform(0.05, 1.0));
                for (auto& v : p) v /= sum;
                for (auto& v : a) v = s.uniform(0.5, 5.0);
                const double m = kn_mean(g, ProbabilityVector(p), a);
                const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
                if (!(m >= *lo - 1e-12 && m <= *hi + 1e-12)) return false;
            }
        }
        return true;
    });

    guarded("statmech: deformed-weight evaluation equals the direct mean", [&] {
        const Arithmetic X{renyi_generator(2.0)};
        for (int i = 0; i < 20; ++i) {
            std::vector<double> p = {0.3, 0.45, 0.25}, a(3);
            for (auto& v : a) v = s.uniform(0.2, 3.0);
            const ProbabilityVector pv(p);
            if (!close(kn_mean_deformed(X, pv, a), kn_mean(X.gen(), pv, a),
                       1e-10))
                return false;
        }
        return true;
    });

    guarded("statmech: entropy identities", [&] {
        const ProbabilityVector u({0.25, 0.25, 0.25, 0.25});
        for (double q : {0.5, 2.0, 5.0}) {
            if (!close(renyi_entropy(u, q), std::log(4.0), 1e-12)) return false;
        }
        const ProbabilityVector p({0.3, 0.7});
        if (renyi_entropy(p, 1.0 + 1e-7) != shannon_entropy(p)) return false;
        const Arithmetic I{identity_generator()};
        return close(nn_shannon_entropy(I, I, p.values()), shannon_entropy(p),
                     1e-12);
    });

    guarded("statmech: maxent solution is stationary", [&] {
        const Arithmetic X{log_generator()}, E{identity_generator()};
        const MaxEntSolution sol =
            maxent_solve(X, {{0.0, 1.0, 2.5}, E}, s.uniform(0.2, 2.0));
        double unit = 0.0;
        for (double pk : sol.p) unit += std::log(pk);
        return sol.stationarity_residual < 1e-8 && std::fabs(unit - 1.0) < 1e-10;
    });

    guarded("escort: odd parts keep pairs normalized", [&] {
        const auto h = [](double x) { return 0.5 * std::sin(std::numbers::pi * x); };
        for (int i = 0; i < 200; ++i) {
            const double p = s.uniform(0.0, 1.0);
            if (std::fabs(escort_binary(h, p) + escort_binary(h, 1.0 - p) - 1.0) >
                1e-12)
                return false;
        }
        return true;
    });

    guarded("escort: affine family sums to one and hits its boundary forms", [&] {
        for (double a : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            const double n = 4.0;
            const double den = n + (2.0 - n) * a;
            if (!close(escort_affine(a, n, 0.0), (1.0 - a) / den, 1e-14))
                return false;
            if (!close(escort_affine(a, n, 1.0), (1.0 + a) / den, 1e-14))
                return false;
            std::vector<double> p(4);
            double sum = 0.0;
            for (auto& v : p) sum += (v = s.uniform(0.1, 1.0));
            double total = 0.0;
            for (auto& v : p) total += escort_affine(a, n, v / sum);
            if (std::fabs(total - 1.0) > 1e-12) return false;
        }
        return true;
    });

    guarded("escort: conditional law matches the closed form", [&] {
        for (int i = 0; i < 30; ++i) {
            const double theta = s.uniform(0.0, std::numbers::pi);
            const double c = std::cos(theta / 2.0);
            if (std::fabs(quantum_conditional(theta) - c * c) > 1e-12)
                return false;
        }
        return true;
    });

    guarded("escort: hidden-variable average equals the conditional law", [&] {
        for (int i = 0; i < 5; ++i) {
            const double beta = s.uniform(0.0, 1.0);
            const double alpha = beta + s.uniform(0.0, std::numbers::pi);
            const double c = std::cos((alpha - beta) / 2.0);
            if (std::fabs(hidden_variable_integral(alpha, beta) - c * c) > 1e-8)
                return false;
        }
        return true;
    });

    guarded("escort: rescaled quadruple normalization", [&] {
        const auto g = [](double p) { return SpinBijection::forward(p); };
        for (int i = 0; i < 20; ++i) {
            const double u = s.uniform(0.0, 0.5), v = s.uniform(0.0, 0.5);
            if (!bell_rescaled_check(g, {u, 0.5 - u, v, 0.5 - v})) return false;
        }
        return true;
    });

    guarded("cosmo: matched deformation reproduces the standard expansion", [&] {
        const CosmologyParams P{0.3, 0.7, 0.3};
        const MatchedFriedmann mf = matched_generator(P);
        const Arithmetic X{mf.gen};
        for (int i = 0; i < 20; ++i) {
            const double t = s.uniform(0.05, 3.0);
            const double a0 = friedmann_scale_factor(t, P);
            if (!close(nn_friedmann_scale_factor(t, P.omega, X), a0, 1e-10))
                return false;
        }
        const Trajectory traj = nn_friedmann_integrate(0.1, 3.0, P.omega, X, 2000);
        return close(traj.a.back(), friedmann_scale_factor(3.0, P), 1e-6);
    });

    return report;
}

}  // namespace nncalc
