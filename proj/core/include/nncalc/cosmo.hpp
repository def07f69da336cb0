#pragma once

#include <vector>

#include "nncalc/arithmetic.hpp"

namespace nncalc {

// Flat two-component expansion model. omega_m and omega_lambda drive the
// standard closed form; omega is the single density ratio seen by the
// deformed-time description.
struct CosmologyParams {
    double omega_m = 0.3;
    double omega_lambda = 0.7;
    double omega = 0.3;
};

// Standard closed form
//   a(t) = ( sqrt(omega_m/omega_lambda) sinh(3 sqrt(omega_lambda) t / 2) )^{2/3},
// the solution of da/dt = sqrt(omega_lambda a^2 + omega_m / a) with a(0) = 0.
double friedmann_scale_factor(double t, const CosmologyParams& P);

// Deformed-time closed form a(t) = ((3/2) sqrt(omega) f_X(t))^{2/3}, the
// solution of the deformed equation Da/Dt = sqrt(omega / a). Requires
// f_X(t) > 0.
double nn_friedmann_scale_factor(double t, double omega, const Arithmetic& X);

struct MatchedFriedmann {
    Generator gen;
    double kappa;  // (3/2) sqrt(omega_lambda)
};

// The time reparametrization that makes the two descriptions coincide:
// f(t) = sqrt(omega_m/omega) sinh(kappa t)/kappa with
// kappa = (3/2) sqrt(omega_lambda), a scaled arcsinh/sinh pair.
MatchedFriedmann matched_generator(const CosmologyParams& P);

struct Trajectory {
    std::vector<double> t;
    std::vector<double> a;
};

// Integrates da/dr = sqrt(omega / a) with fixed-step RK4 in the conjugate
// time r = f_X(t), from t_start (initial value taken from the closed form)
// to t_end. Needs t_end > t_start > 0, f_X(t_start) > 0 and steps >= 100
// (StepFailure below that). Returns the (t, a) samples including both
// endpoints.
Trajectory nn_friedmann_integrate(double t_start, double t_end, double omega,
                                  const Arithmetic& X, int steps);

}  // namespace nncalc
