#pragma once

#include <functional>

#include "nncalc/arithmetic.hpp"

namespace nncalc {

// A map A between two deformed number lines, bundled with the arithmetics it
// plugs into. Its conjugate is the ordinary real function
//
//   A~(r) = f_Y(A(f_X^-1(r)))
//
// computed on demand; derivative and integral of A are the pullbacks of the
// ordinary derivative and integral of A~.
struct NNFunction {
    Arithmetic dom;                      // X
    Arithmetic cod;                      // Y
    std::function<double(double)> map;   // A : domain(X) -> domain(Y)

    double operator()(double x) const { return map(x); }
    double conjugate(double r) const;
};

// Deformed derivative DA/Dx = f_Y^-1( dA~/dr at r = f_X(x) ). The inner
// derivative uses a central difference with two Richardson halvings; step 0
// picks 1e-4 (1 + |f_X(x)|). DomainViolation if the stencil leaves the
// conjugate range of X; NonFinite if the quotient degenerates.
double nn_derivative(const NNFunction& fn, double x, double step = 0.0);

// Deformed integral over [lo, hi] = f_Y^-1( int_{f_X(lo)}^{f_X(hi)} A~ ),
// adaptive Simpson with absolute tolerance `tol` and a 2^20 panel budget
// (QuadratureFailure beyond it). Swapping the bounds flips the sign in
// conjugate space.
double nn_integral(const NNFunction& fn, double lo, double hi,
                   double tol = 1e-10);

// Exp(x) = f_Y^-1(e^{f_X(x)}) and Ln(y) = f_X^-1(ln f_Y(y)). Exp turns
// X-addition into Y-multiplication; Ln is its inverse. Ln rejects arguments
// with f_Y(y) <= 0.
double nn_exp(const Arithmetic& X, const Arithmetic& Y, double x);
double nn_ln(const Arithmetic& X, const Arithmetic& Y, double y);

namespace detail {

// Richardson extrapolation over a symmetric difference quotient Q(h),
// assumed accurate to O(h^2): combines Q(h), Q(h/2), Q(h/4).
double richardson_limit(const std::function<double(double)>& quotient,
                        double h);

// Central-difference derivative of F at r with the same extrapolation.
double richardson_derivative(const std::function<double(double)>& F, double r,
                             double h);

// Adaptive Simpson quadrature with an absolute tolerance and a hard panel
// budget; throws QuadratureFailure when the budget runs out first.
double adaptive_simpson(const std::function<double(double)>& F, double a,
                        double b, double tol, long max_panels);

}  // namespace detail

}  // namespace nncalc
