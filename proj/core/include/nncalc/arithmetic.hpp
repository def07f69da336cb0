#pragma once

#include "nncalc/generator.hpp"

namespace nncalc {

// Arithmetic induced by a generator f:
//
//   x (+) y = f^-1(f(x) + f(y))        x (-) y = f^-1(f(x) - f(y))
//   x (*) y = f^-1(f(x) * f(y))        x (/) y = f^-1(f(x) / f(y))
//
// with neutral elements f^-1(0) and f^-1(1). The numbers these operations
// combine live in the generator's domain; the combination itself happens on
// the ordinary real line ("conjugate space").
class Arithmetic {
public:
    explicit Arithmetic(Generator g);

    const Generator& gen() const { return gen_; }

    // Checked f(x); DomainViolation if x is outside the generator's domain.
    double to_conjugate(double x) const;

    // Checked f^-1(r); OutOfRange if r has no preimage (outside the range,
    // or the preimage is not representable).
    double from_conjugate(double r) const;

    // The element playing the role of the real r: f^-1(r). Same checks as
    // from_conjugate.
    double embed(double r) const;

    // f^-1(0). Throws OutOfRange for generators whose range excludes 0
    // (the e^{(1-q)x} family has no additive neutral).
    double zero() const;

    // f^-1(1).
    double one() const;

    double oplus(double x, double y) const;
    double ominus(double x, double y) const;
    double odot(double x, double y) const;
    double oslash(double x, double y) const;   // DivisionByZero if f(y) == 0

    // Additive inverse f^-1(-f(x)); OutOfRange when -f(x) has no preimage.
    double neg(double x) const;

private:
    double pull(double r, const char* op) const;
    Generator gen_;
};

// Mixed operations: x lives in a1, y in a2, the result in target. With all
// three equal these reduce exactly to target.oplus / target.odot.
double mixed_add(const Arithmetic& target, const Arithmetic& a1, double x,
                 const Arithmetic& a2, double y);
double mixed_mul(const Arithmetic& target, const Arithmetic& a1, double x,
                 const Arithmetic& a2, double y);

}  // namespace nncalc
