#include "nncalc/arithmetic.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "nncalc/errors.hpp"

namespace nncalc {

namespace {

std::string describe(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

Arithmetic::Arithmetic(Generator g) : gen_(std::move(g)) {}

double Arithmetic::to_conjugate(double x) const {
    if (!gen_.domain.contains(x)) {
        throw DomainViolation("generator '" + gen_.label + "': " + describe(x) +
                              " is outside the domain " + gen_.domain.str());
    }
    return gen_.forward(x);
}

double Arithmetic::from_conjugate(double r) const {
    if (!gen_.range.contains(r)) {
        throw OutOfRange("generator '" + gen_.label + "': " + describe(r) +
                         " is outside the range " + gen_.range.str() +
                         ", no preimage exists");
    }
    const double v = gen_.inverse(r);
    if (!std::isfinite(v)) {
        throw OutOfRange("generator '" + gen_.label + "': preimage of " +
                         describe(r) + " is not representable");
    }
    return v;
}

double Arithmetic::embed(double r) const { return from_conjugate(r); }

double Arithmetic::zero() const { return from_conjugate(0.0); }

double Arithmetic::one() const { return from_conjugate(1.0); }

// Result-side check for the binary operations: the combined conjugate value
// must sit in the range and its preimage must land back inside the domain.
double Arithmetic::pull(double r, const char* op) const {
    if (!gen_.range.contains(r)) {
        throw DomainViolation(std::string(op) + ": result " + describe(r) +
                              " leaves the range " + gen_.range.str() +
                              " of generator '" + gen_.label + "'");
    }
    const double v = gen_.inverse(r);
    if (!std::isfinite(v) || !gen_.domain.contains(v)) {
        throw DomainViolation(std::string(op) + ": result leaves the domain " +
                              gen_.domain.str() + " of generator '" +
                              gen_.label + "'");
    }
    return v;
}

double Arithmetic::oplus(double x, double y) const {
    return pull(to_conjugate(x) + to_conjugate(y), "oplus");
}

double Arithmetic::ominus(double x, double y) const {
    return pull(to_conjugate(x) - to_conjugate(y), "ominus");
}

double Arithmetic::odot(double x, double y) const {
    return pull(to_conjugate(x) * to_conjugate(y), "odot");
}

double Arithmetic::oslash(double x, double y) const {
    const double fx = to_conjugate(x);
    const double fy = to_conjugate(y);
    if (fy == 0.0) {
        throw DivisionByZero("oslash: divisor " + describe(y) +
                             " maps to 0 under generator '" + gen_.label + "'");
    }
    return pull(fx / fy, "oslash");
}

double Arithmetic::neg(double x) const {
    const double r = -to_conjugate(x);
    if (!gen_.range.contains(r)) {
        throw OutOfRange("neg: -f(" + describe(x) +
                         ") has no preimage under generator '" + gen_.label +
                         "'");
    }
    return from_conjugate(r);
}

double mixed_add(const Arithmetic& target, const Arithmetic& a1, double x,
                 const Arithmetic& a2, double y) {
    const double r = a1.to_conjugate(x) + a2.to_conjugate(y);
    if (!target.gen().range.contains(r)) {
        throw OutOfRange("mixed_add: combined value has no preimage under "
                         "generator '" + target.gen().label + "'");
    }
    return target.from_conjugate(r);
}

double mixed_mul(const Arithmetic& target, const Arithmetic& a1, double x,
                 const Arithmetic& a2, double y) {
    const double r = a1.to_conjugate(x) * a2.to_conjugate(y);
    if (!target.gen().range.contains(r)) {
        throw OutOfRange("mixed_mul: combined value has no preimage under "
                         "generator '" + target.gen().label + "'");
    }
    return target.from_conjugate(r);
}

}  // namespace nncalc
