#pragma once

#include <stdexcept>
#include <string>

namespace ugatom {

// Base of every error thrown by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Result would not fit in a double.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Position coincides with a point source (r = 0 or r = r0).
class SingularPointError : public DomainError {
public:
    using DomainError::DomainError;
};

// Quantum numbers that do not label a Dirac bound state.
class InvalidStateError : public DomainError {
public:
    using DomainError::DomainError;
};

// Z*alpha_e >= |kappa_r|: gamma would be imaginary.
class SupercriticalChargeError : public DomainError {
public:
    using DomainError::DomainError;
};

// Transition with E_upper <= E_lower.
class NonEmissiveError : public DomainError {
public:
    using DomainError::DomainError;
};

// Numerical procedure failed to reach its tolerance.
class NumericError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public NumericError {
public:
    QuadratureError(const std::string& what, double achieved_error)
        : NumericError(what), achieved_error_(achieved_error) {}
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

// Shooting bracket does not contain a sign change of the matching function.
class NoSignChangeError : public NumericError {
public:
    using NumericError::NumericError;
};

// Radial ODE integration produced non-finite values or the wrong node count.
class StiffnessError : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace ugatom
