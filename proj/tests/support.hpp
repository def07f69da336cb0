#pragma once

// Independent numeric routes used as oracles. These deliberately differ from
// the library's algorithms (5-point stencil vs Richardson central difference,
// Romberg on trapezoid halvings vs adaptive Simpson) so a shared bug cannot
// cancel out of a comparison.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

// 5-point central stencil, O(h^4).
inline double stencil5(const std::function<double(double)>& f, double x,
                       double h = 1e-4) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) /
           (12 * h);
}

// Romberg integration: trapezoid halvings plus an extrapolation table.
inline double romberg(const std::function<double(double)>& f, double a,
                      double b) {
    constexpr int levels = 18;
    static thread_local double table[levels][levels];
    double h = b - a;
    table[0][0] = 0.5 * h * (f(a) + f(b));
    long n = 1;
    for (int i = 1; i < levels; ++i) {
        h *= 0.5;
        n *= 2;
        double acc = 0.0;
        for (long k = 1; k < n; k += 2) acc += f(a + k * h);
        table[i][0] = 0.5 * table[i - 1][0] + h * acc;
        double weight = 1.0;
        for (int j = 1; j <= i; ++j) {
            weight *= 4.0;
            table[i][j] = table[i][j - 1] +
                          (table[i][j - 1] - table[i - 1][j - 1]) / (weight - 1.0);
        }
        if (i > 3 && std::fabs(table[i][i] - table[i - 1][i - 1]) <
                         1e-14 * (1.0 + std::fabs(table[i][i])))
            return table[i][i];
    }
    return table[levels - 1][levels - 1];
}

// Uniform point on the probability simplex via normalized exponentials.
inline std::vector<double> simplex_point(std::mt19937_64& rng, std::size_t n) {
    std::exponential_distribution<double> draw(1.0);
    std::vector<double> p(n);
    double total = 0.0;
    for (auto& v : p) total += (v = draw(rng));
    for (auto& v : p) v /= total;
    return p;
}

}  // namespace oracle
