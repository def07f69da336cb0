#pragma once

#include <functional>
#include <map>
#include <string>

#include "nncalc/interval.hpp"

namespace nncalc {

// A generator is a strictly monotone continuous bijection f from `domain`
// onto `range`, stored together with its exact inverse. Every deformed
// arithmetic, derivative and integral in this library is induced by one of
// these maps: the generator carries numbers to the ordinary real line, the
// work happens there, and the inverse carries the result back.
//
// The struct is open: any user-supplied forward/inverse pair is a valid
// generator as long as validate() is happy with it. The catalog below covers
// the built-in families.
struct Generator {
    std::string label;
    std::function<double(double)> forward;
    std::function<double(double)> inverse;
    Interval domain;                       // where forward may be evaluated
    Interval range;                        // image forward(domain)
    Interval check_window;                 // bounded window used by validate()
    std::map<std::string, double> params;
};

// --- built-in catalog ---

// f(x) = x. The induced arithmetic is the ordinary one.
Generator identity_generator();

// f(x) = ln x on (0, inf). Addition becomes multiplication of the operands.
Generator log_generator();

// f(x) = ln(-x) on (-inf, 0), the mirror of the log generator.
Generator neglog_generator();

// f(x) = arcsinh(kappa x)/kappa on R, kappa >= 0; kappa = 0 degenerates to
// the identity map (handled exactly, no 0/0).
Generator kaniadakis_generator(double kappa);

// f(x) = e^{(1-q) x} on R with range (0, inf), q != 1. Weighted means built
// on this family interpolate between min, geometric-like means and max.
Generator renyi_generator(double q);

// Affine map f(p) = (1 - a + 2 a p) / (n + (2 - n) a) with -1 <= a <= 1,
// a != 0, n >= 3. Decreasing for a < 0, which is fine: monotone either way.
Generator lemma2_generator(double a, double n);

// Inverse of the periodic unit-cell bijection g(x) = n + sin^2(pi (x - n)/2)
// for x in [n, n+1]. forward = g^-1 (per-cell bisection), inverse = g.
Generator spin_generator();

// Build a catalog generator by name with named parameters. Unknown names,
// missing parameters and leftover parameters all raise InvalidParam.
Generator make_generator(const std::string& name,
                         const std::map<std::string, double>& params = {});

// Accepts either a bare catalog name ("log") or a JSON object of the form
// {"name": "kaniadakis", "params": {"kappa": 1.0}}.
Generator generator_from_config(const std::string& name_or_json);

// Round-trip |f^-1(f(x)) - x| <= 1e-10 (1 + |x|) and strict monotonicity of
// f on a grid across check_window. Throws InvalidParam on the first failure.
void validate(const Generator& g, int grid_points = 1000);

}  // namespace nncalc
