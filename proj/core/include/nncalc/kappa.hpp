#pragma once

#include <functional>

#include "nncalc/table.hpp"

namespace nncalc {

// Deformed real line generated by f(x) = arcsinh(kappa x)/kappa, worked with
// directly in closed form. Throughout, kappa >= 0 and kappa = 0 recovers the
// ordinary formulas exactly.

// Derivative of A viewed as a map from the kappa-deformed line to the
// ordinary one: (dA/dx) * sqrt(1 + kappa^2 x^2). The plain derivative is a
// central difference with two Richardson halvings; step 0 picks
// 1e-4 (1 + |x|). Agrees with nn_derivative over the kaniadakis generator.
double kappa_derivative(const std::function<double(double)>& A, double x,
                        double kappa, double step = 0.0);

// "Dual" difference quotient: the samples are subtracted with the deformed
// minus, but the result is divided by the PLAIN increment,
//
//   lim  ( A(y+d) (-) A(y) ) / d .
//
// That mix of the two arithmetics makes it a different object from the
// deformed derivative: it is kept because the mismatch is instructive, not
// because it is the derivative this calculus induces. Its value is the plain
// derivative of f(A(y)), e.g. it sends the deformed logarithm to 1/y while the
// honest deformed derivative of the same map is kappa_nn_ln_derivative.
double kappa_dual_derivative(const std::function<double(double)>& A, double y,
                             double kappa, double step = 0.0);

// The deformed logarithm Ln(y) = (1/kappa) sinh(kappa ln y), y > 0: the map
// whose deformed derivative and dual quotient disagree.
double kappa_ln(double y, double kappa);

// Closed form of the deformed derivative of kappa_ln:
// (1/kappa) sinh(kappa / y), y > 0. Tends to 1/y as kappa -> 0.
double kappa_nn_ln_derivative(double y, double kappa);

// Deformed exponential read off in the ordinary codomain:
// e^{arcsinh(kappa x)/kappa}. Overflow is reported, never returned as inf.
double kappa_exp(double x, double kappa);

// Deformed exponential mapped back onto the deformed line itself:
// (1/kappa) sinh(kappa e^{arcsinh(kappa x)/kappa}).
double kappa_exp_self(double x, double kappa);

// Log-spaced table of both exponential conventions evaluated at -x for
// x in [x_lo, x_hi]. Columns: x, exp_k1_k0 (ordinary codomain), exp_k1_k1
// (deformed codomain); the column names are a fixed output interface. The
// two tails agree for large x and split apart below x ~ 1.
Table fig1_table(double x_lo, double x_hi, int points, double kappa);

}  // namespace nncalc
