// Microbenchmarks for the hot paths: generator round trips, deformed
// operations, the per-cell bisection behind the spin generator, and the
// numerical derivative and quadrature kernels.

#include <benchmark/benchmark.h>

#include <cmath>

#include "nncalc/arithmetic.hpp"
#include "nncalc/calculus.hpp"
#include "nncalc/escort.hpp"
#include "nncalc/generator.hpp"
#include "nncalc/kappa.hpp"

namespace {

using nncalc::Arithmetic;
using nncalc::NNFunction;

void BM_LogOplus(benchmark::State& state) {
    const Arithmetic X{nncalc::log_generator()};
    double x = 2.0;
    for (auto _ : state) {
        x = X.oplus(x, 1.5);
        if (x > 1e100) x = 2.0;
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_LogOplus);

void BM_KaniadakisRoundTrip(benchmark::State& state) {
    const nncalc::Generator g = nncalc::kaniadakis_generator(1.0);
    double x = 0.7;
    for (auto _ : state) {
        x = g.inverse(g.forward(x)) + 1e-9;
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_KaniadakisRoundTrip);

void BM_SpinForward(benchmark::State& state) {
    const nncalc::Generator g = nncalc::spin_generator();
    double x = 0.1;
    for (auto _ : state) {
        // forward inverts the cell map by bisection, the expensive direction
        benchmark::DoNotOptimize(g.forward(x));
        x += 0.37;
        if (x > 40.0) x = 0.1;
    }
}
BENCHMARK(BM_SpinForward);

void BM_KappaExp(benchmark::State& state) {
    double x = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nncalc::kappa_exp(x, 1.0));
        x += 0.01;
        if (x > 10.0) x = -10.0;
    }
}
BENCHMARK(BM_KappaExp);

void BM_NNDerivative(benchmark::State& state) {
    const NNFunction fn{Arithmetic{nncalc::log_generator()},
                        Arithmetic{nncalc::kaniadakis_generator(1.0)},
                        [](double x) { return x * x + 1.0; }};
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nn_derivative(fn, x));
        x += 0.125;
        if (x > 8.0) x = 0.5;
    }
}
BENCHMARK(BM_NNDerivative);

void BM_NNIntegral(benchmark::State& state) {
    const NNFunction fn{Arithmetic{nncalc::log_generator()},
                        Arithmetic{nncalc::identity_generator()},
                        [](double x) { return std::exp(std::sin(3.0 * x)); }};
    for (auto _ : state) {
        benchmark::DoNotOptimize(nn_integral(fn, 0.5, 4.0, 1e-10));
    }
}
BENCHMARK(BM_NNIntegral);

void BM_HiddenVariableIntegral(benchmark::State& state) {
    double beta = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            nncalc::hidden_variable_integral(beta + 1.0, beta));
        beta += 0.1;
        if (beta > 3.0) beta = 0.0;
    }
}
BENCHMARK(BM_HiddenVariableIntegral);

}  // namespace

BENCHMARK_MAIN();
