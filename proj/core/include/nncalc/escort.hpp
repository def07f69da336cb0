#pragma once

#include <array>
#include <functional>

#include "nncalc/statmech.hpp"
#include "nncalc/table.hpp"

namespace nncalc {

// Escort maps: monotone reweightings g of probabilities. A binary escort
// built from an odd part h via g(p) = 1/2 + h(p - 1/2) preserves the pair
// normalization g(p) + g(1-p) = 1; that symmetry is exactly oddness of h.

// Periodic unit-cell bijection behind the spin escort. forward is the closed
// form n + sin^2(pi (x-n)/2); inverse brackets the preimage inside the unit
// cell of floor(y) and bisects 64 times (no closed form is used here, see
// the test suite for the independent cross-check).
struct SpinBijection {
    static double forward(double x);
    static double inverse(double y);
};

// g(p) = 1/2 + h(p - 1/2) for p in [0, 1]. DomainViolation outside [0, 1],
// RangeViolation when h pushes the value out of [0, 1], NonFinite if h does
// not return a number.
double escort_binary(const std::function<double(double)>& h, double p);

// The n-outcome affine escort g(p) = (1 - a + 2 a p) / (n + (2 - n) a) with
// -1 <= a <= 1, n >= 3 (a = 0 is allowed here: constant 1/n, no longer a
// bijection but a valid escort). Sums to 1 over any distribution.
double escort_affine(double a, double n, double p);

// Conditional probability of the spin escort at relative angle theta in
// [0, pi]: g((pi - theta)/pi) with g(p) = sin^2(pi p / 2), which is the
// cos^2(theta/2) law.
double quantum_conditional(double theta);

// Hidden-variable average behind quantum_conditional, evaluated with the
// full deformed machinery: X = Y = the spin arithmetic, the conditional
// density is the constant whose conjugate is 1/pi, and the integral runs
// from the embedded alpha to (embedded pi) (+) (embedded beta). Requires
// 0 <= alpha - beta <= pi; equals cos^2((alpha - beta)/2).
double hidden_variable_integral(double alpha, double beta, double tol = 1e-10);

// Four-outcome check: given pair-normalized probabilities
// (p1 + p2 = p3 + p4 = 1/2), the rescaled escort u -> g(2u)/2 must again sum
// to 1 over the quadruple. InvalidParam when the pair sums are off.
bool bell_rescaled_check(const std::function<double(double)>& g,
                         const std::array<double, 4>& p4, double tol = 1e-10);

// Power escort P_k = p_k^q / sum_j p_j^q. q = 1 returns p unchanged; q < 0
// demands strictly positive entries.
ProbabilityVector escort_renormalized(const ProbabilityVector& p, double q);

// Column of affine escort values g_n(p) for growing n: columns n, g. For
// a < 1 the values decrease toward 0; a = 1 pins g = p for every n.
Table correspondence_limit(double a, double p, const std::vector<double>& n_list);

}  // namespace nncalc
