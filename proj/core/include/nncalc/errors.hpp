#pragma once

#include <stdexcept>
#include <string>

namespace nncalc {

// Every numeric failure surfaces as a typed exception. Nothing in the library
// signals trouble through NaN or infinity return values.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A conjugate-space value has no preimage (outside the generator's range).
class OutOfRange : public Error {
public:
    using Error::Error;
};

// An operand or result left the generator's domain.
class DomainViolation : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// A difference quotient or intermediate came out NaN/inf.
class NonFinite : public Error {
public:
    using Error::Error;
};

// Adaptive quadrature ran out of panel budget before reaching tolerance.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

class NormalizationError : public Error {
public:
    using Error::Error;
};

class InvalidParam : public Error {
public:
    using Error::Error;
};

// An escort map produced a value outside [0, 1].
class RangeViolation : public Error {
public:
    using Error::Error;
};

// ODE integration was asked to run with too coarse a step count.
class StepFailure : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

}  // namespace nncalc
