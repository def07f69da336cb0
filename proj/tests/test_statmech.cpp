#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <nncalc/errors.hpp>
#include <nncalc/statmech.hpp>

#include "support.hpp"

using namespace nncalc;
using doctest::Approx;

namespace {

Generator cube_generator() {
    Generator g;
    g.label = "cube";
    g.forward = [](double x) { return x * x * x; };
    g.inverse = [](double r) { return std::cbrt(r); };
    g.domain = Interval::all();
    g.range = Interval::all();
    g.check_window = Interval::closed(-10.0, 10.0);
    return g;
}

}  // namespace

TEST_CASE("probability vectors are validated on construction") {
    CHECK_NOTHROW(ProbabilityVector({0.25, 0.75}));
    CHECK_NOTHROW(ProbabilityVector({0.0, 1.0}));
    CHECK_THROWS_AS(ProbabilityVector({}), InvalidParam);
    CHECK_THROWS_AS(ProbabilityVector({0.5, 0.6}), InvalidParam);
    CHECK_THROWS_AS(ProbabilityVector({-0.1, 1.1}), InvalidParam);
    CHECK_THROWS_AS(ProbabilityVector({1.2, -0.2}), InvalidParam);

    const ProbabilityVector p({0.3, 0.7});
    CHECK(p.size() == 2);
    CHECK(p[1] == 0.7);
}

TEST_CASE("weighted means in closed form") {
    const ProbabilityVector p({0.25, 0.75});
    CHECK(kn_mean(identity_generator(), p, {2.0, 8.0}) ==
          Approx(6.5).epsilon(1e-14));
    CHECK(kn_mean(log_generator(), p, {2.0, 8.0}) ==
          Approx(5.65685424949238020).epsilon(1e-13));

    // a user-supplied exponential generator
    Generator expgen;
    expgen.label = "exp";
    expgen.forward = [](double x) { return std::exp(x); };
    expgen.inverse = [](double r) { return std::log(r); };
    expgen.domain = Interval::all();
    expgen.range = Interval::positive();
    expgen.check_window = Interval::closed(-5.0, 5.0);
    const ProbabilityVector half({0.5, 0.5});
    CHECK(kn_mean(expgen, half, {0.0, 1.0}) ==
          Approx(0.620114506958277525).epsilon(1e-13));

    CHECK(kn_mean(renyi_generator(2.0), ProbabilityVector({0.3, 0.7}),
                  {1.0, 2.0}) ==
          Approx(1.58426477815637131).epsilon(1e-13));
}

TEST_CASE("means stay between min and max") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> draw(0.2, 4.0);
    const std::vector<Generator> pool = {log_generator(),
                                         renyi_generator(0.5),
                                         renyi_generator(3.0),
                                         kaniadakis_generator(1.0)};
    for (const auto& g : pool) {
        for (int i = 0; i < 20; ++i) {
            const auto w = oracle::simplex_point(rng, 4);
            std::vector<double> a(4);
            for (auto& v : a) v = draw(rng);
            const double m = kn_mean(g, ProbabilityVector(w), a);
            CHECK(m >= *std::min_element(a.begin(), a.end()) - 1e-12);
            CHECK(m <= *std::max_element(a.begin(), a.end()) + 1e-12);
        }
    }
}

TEST_CASE("the exponential family mean recovers the plain average as q -> 1") {
    const ProbabilityVector p({0.5, 0.5});
    const std::vector<double> a = {0.5, 0.6};
    CHECK(kn_mean(renyi_generator(1.0 + 1e-6), p, a) ==
          Approx(0.54999999875).epsilon(1e-9));
    for (double q : {1.0 - 1e-6, 1.0 + 1e-6}) {
        CHECK(std::fabs(kn_mean(renyi_generator(q), p, a) - 0.55) < 1e-8);
    }
}

TEST_CASE("means are invariant under affine reparametrization") {
    const Generator base = log_generator();
    Generator scaled = base;
    scaled.forward = [](double x) { return 2.5 * std::log(x) - 3.0; };
    scaled.inverse = [](double r) { return std::exp((r + 3.0) / 2.5); };

    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> draw(0.5, 4.0);
    for (int i = 0; i < 10; ++i) {
        const auto w = oracle::simplex_point(rng, 4);
        std::vector<double> a(4);
        for (auto& v : a) v = draw(rng);
        const ProbabilityVector p(w);
        CHECK(kn_mean(scaled, p, a) ==
              Approx(kn_mean(base, p, a)).epsilon(1e-10));
    }
}

TEST_CASE("the mean splits over deformed addition") {
    const Arithmetic X(renyi_generator(2.0));
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> draw(-1.0, 2.0);
    for (int i = 0; i < 15; ++i) {
        const auto w = oracle::simplex_point(rng, 3);
        std::vector<double> a(3), b(3), c(3);
        for (std::size_t k = 0; k < 3; ++k) {
            a[k] = draw(rng);
            b[k] = draw(rng);
            c[k] = X.oplus(a[k], b[k]);
        }
        const ProbabilityVector p(w);
        CHECK(kn_mean(X.gen(), p, c) ==
              Approx(X.oplus(kn_mean(X.gen(), p, a),
                             kn_mean(X.gen(), p, b))).epsilon(1e-9));
    }
}

TEST_CASE("deformed evaluation of the mean agrees with the direct one") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> draw(0.5, 3.0);
    const std::vector<Arithmetic> pool = {Arithmetic(renyi_generator(2.0)),
                                          Arithmetic(log_generator()),
                                          Arithmetic(identity_generator())};
    for (const auto& X : pool) {
        for (int i = 0; i < 10; ++i) {
            const auto w = oracle::simplex_point(rng, 4);
            std::vector<double> a(4);
            for (auto& v : a) v = draw(rng);
            const ProbabilityVector p(w);
            CHECK(kn_mean_deformed(X, p, a) ==
                  Approx(kn_mean(X.gen(), p, a)).epsilon(1e-9));
        }
    }

    // a zero weight has no preimage on the positive half-line
    CHECK_THROWS_AS(kn_mean_deformed(Arithmetic(renyi_generator(2.0)),
                                     ProbabilityVector({0.0, 1.0}),
                                     {1.0, 2.0}),
                    OutOfRange);
}

TEST_CASE("translation invariance holds exactly for the exponential family") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> draw(-1.0, 2.0), shift(-2.0, 2.0);
    for (double q : {0.5, 3.0}) {
        const Generator g = renyi_generator(q);
        for (int i = 0; i < 10; ++i) {
            const auto w = oracle::simplex_point(rng, 3);
            std::vector<double> a(3);
            for (auto& v : a) v = draw(rng);
            CHECK(kn_translation_check(g, ProbabilityVector(w), a, shift(rng)));
        }
    }

    // and fails for the cube mean, by the textbook margin
    const ProbabilityVector half({0.5, 0.5});
    const double defect =
        kn_translation_defect(cube_generator(), half, {0.0, 1.0}, 1.0);
    CHECK(defect == Approx(0.142736901536786395).epsilon(1e-12));
    CHECK_FALSE(
        kn_translation_check(cube_generator(), half, {0.0, 1.0}, 1.0));
}

TEST_CASE("shannon and renyi entropies") {
    const ProbabilityVector p({0.3, 0.7});
    CHECK(shannon_entropy(p) == Approx(0.610864302054893463).epsilon(1e-13));
    CHECK(shannon_entropy(ProbabilityVector({0.0, 1.0})) == Approx(0.0));
    CHECK(shannon_entropy(ProbabilityVector({0.5, 0.5})) ==
          Approx(0.693147180559945309).epsilon(1e-14));

    const ProbabilityVector u4({0.25, 0.25, 0.25, 0.25});
    for (double q : {0.5, 2.0, 5.0}) {
        CHECK(renyi_entropy(u4, q) ==
              Approx(1.38629436111989062).epsilon(1e-13));
    }
    CHECK(renyi_entropy(p, 2.0) == Approx(0.544727175441672031).epsilon(1e-13));
    CHECK(renyi_entropy(p, 0.5) == Approx(0.650508505098256013).epsilon(1e-13));

    // q within 1e-6 of 1 routes to the shannon form, exactly
    CHECK(renyi_entropy(p, 1.0 + 1e-7) == shannon_entropy(p));
    CHECK(renyi_entropy(p, 1.0 - 1e-7) == shannon_entropy(p));

    // zero entries are fine for q > 0, fatal for q <= 0
    CHECK(renyi_entropy(ProbabilityVector({0.5, 0.5, 0.0}), 2.0) ==
          Approx(0.693147180559945309).epsilon(1e-13));
    CHECK_THROWS_AS(renyi_entropy(ProbabilityVector({0.5, 0.5, 0.0}), -1.0),
                    InvalidParam);
    CHECK_THROWS_AS(renyi_entropy(p, std::nan("")), InvalidParam);

    // nonincreasing in q
    std::mt19937_64 rng(53);
    const std::vector<double> qs = {0.25, 0.5, 0.9, 1.5, 2.0, 3.0, 5.0, 8.0};
    for (int i = 0; i < 10; ++i) {
        const ProbabilityVector r(oracle::simplex_point(rng, 5));
        double prev = renyi_entropy(r, qs.front());
        for (std::size_t j = 1; j < qs.size(); ++j) {
            const double cur = renyi_entropy(r, qs[j]);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("deformed shannon form") {
    const Arithmetic I(identity_generator());
    const Arithmetic X(log_generator());

    std::mt19937_64 rng(59);
    for (int i = 0; i < 10; ++i) {
        const auto w = oracle::simplex_point(rng, 4);
        CHECK(nn_shannon_entropy(I, I, w) ==
              Approx(shannon_entropy(ProbabilityVector(w))).epsilon(1e-12));
    }

    // deformed probabilities e^{1/2} carry conjugate weights (1/2, 1/2)
    const double r = std::exp(0.5);
    CHECK(nn_shannon_entropy(X, I, {r, r}) ==
          Approx(0.693147180559945309).epsilon(1e-13));
    CHECK(nn_shannon_entropy(X, X, {r, r}) == Approx(2.0).epsilon(1e-13));

    // a single certain outcome has zero entropy
    CHECK(nn_shannon_entropy(X, I, {std::exp(1.0)}) == Approx(0.0));

    CHECK_THROWS_AS(nn_shannon_entropy(X, I, {std::exp(0.3), std::exp(0.3)}),
                    NormalizationError);
    CHECK_THROWS_AS(nn_shannon_entropy(X, I, {std::exp(1.2), std::exp(0.5)}),
                    DomainViolation);
    CHECK_THROWS_AS(nn_shannon_entropy(X, I, {0.9, std::exp(0.5)}),
                    DomainViolation);
    CHECK_THROWS_AS(nn_shannon_entropy(X, I, {}), InvalidParam);
}

TEST_CASE("maximum entropy weights are Gibbs weights") {
    const Arithmetic I(identity_generator());
    const EnergySpectrum two{{0.0, 1.0}, I};
    const MaxEntSolution g = maxent_solve(I, two, 1.0);
    REQUIRE(g.p.size() == 2);
    CHECK(g.p[0] == Approx(0.731058578630004879).epsilon(1e-13));
    CHECK(g.p[1] == Approx(0.268941421369995121).epsilon(1e-13));
    CHECK(g.alpha == Approx(1.0 + std::log(g.C)).epsilon(1e-14));
    CHECK(g.stationarity_residual < 1e-12);

    const EnergySpectrum three{{0.0, 1.0, 2.0}, I};
    const MaxEntSolution s = maxent_solve(I, three, 0.5);
    CHECK(s.C == Approx(0.506480391055654026).epsilon(1e-13));
    CHECK(s.p[0] == Approx(0.506480391055654026).epsilon(1e-13));
    CHECK(s.p[1] == Approx(0.307195885718498397).epsilon(1e-13));
    CHECK(s.p[2] == Approx(0.186323723225847577).epsilon(1e-13));
    CHECK(s.alpha == Approx(0.319730329358265424).epsilon(1e-12));

    // beta = 0 is the uniform distribution
    const MaxEntSolution flat = maxent_solve(I, three, 0.0);
    for (double u : flat.p) CHECK(u == Approx(1.0 / 3.0).epsilon(1e-14));

    // negative beta inverts the population ordering
    const MaxEntSolution inv = maxent_solve(I, three, -1.0);
    CHECK(inv.p[0] < inv.p[2]);
}

TEST_CASE("deformed maxent weights satisfy the conjugate normalization") {
    const Arithmetic X(log_generator());
    const EnergySpectrum two{{0.0, 1.0}, Arithmetic(identity_generator())};
    const MaxEntSolution sol = maxent_solve(X, two, 1.0);
    CHECK(sol.p[0] == Approx(2.07727840672726363).epsilon(1e-13));
    CHECK(sol.p[1] == Approx(1.30857848406640766).epsilon(1e-13));
    double sum = 0.0;
    for (double pk : sol.p) sum += X.to_conjugate(pk);
    CHECK(sum == Approx(1.0).epsilon(1e-13));

    // energy levels read through their own generator: levels (1, e) on the
    // log line carry the same conjugate energies as (0, 1) on the plain one
    const EnergySpectrum logtwo{{1.0, 2.71828182845904524},
                                Arithmetic(log_generator())};
    const MaxEntSolution same = maxent_solve(X, logtwo, 1.0);
    CHECK(same.p[0] == Approx(sol.p[0]).epsilon(1e-12));
    CHECK(same.p[1] == Approx(sol.p[1]).epsilon(1e-12));
}

TEST_CASE("no feasible perturbation improves the maxent objective") {
    const Arithmetic I(identity_generator());
    const EnergySpectrum three{{0.0, 1.0, 2.5}, I};
    const double beta = 0.7;
    const MaxEntSolution sol = maxent_solve(I, three, beta);

    const auto objective = [&](const std::vector<double>& u) {
        double s = 0.0;
        for (std::size_t k = 0; k < u.size(); ++k) {
            s += u[k] * std::log(1.0 / u[k]) - beta * u[k] * three.levels[k];
        }
        return s;
    };

    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> draw(-1.0, 1.0);
    const double base = objective(sol.p);
    for (int i = 0; i < 20; ++i) {
        std::vector<double> d(3);
        double mean = 0.0;
        for (auto& v : d) mean += (v = draw(rng));
        mean /= 3.0;
        std::vector<double> u = sol.p;
        for (std::size_t k = 0; k < 3; ++k) u[k] += 1e-3 * (d[k] - mean);
        CHECK(objective(u) <= base + 1e-10);
    }
}

TEST_CASE("maxent failure modes") {
    const Arithmetic I(identity_generator());
    CHECK_THROWS_AS(maxent_solve(I, EnergySpectrum{{}, I}, 1.0), InvalidParam);
    CHECK_THROWS_AS(
        maxent_solve(I, EnergySpectrum{{0.0, 1.0}, I}, std::nan("")),
        InvalidParam);
    CHECK_THROWS_AS(maxent_solve(I, EnergySpectrum{{0.0, 2000.0}, I}, 1.0),
                    Overflow);
}
