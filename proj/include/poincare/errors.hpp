#pragma once

#include <stdexcept>
#include <string>

namespace poincare {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument sits on (or within tolerance of) a pole of a Gamma factor or a
/// vanishing Pochhammer denominator.
class PoleError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// A result would leave the range of finite doubles.
class OverflowError : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public Error {
public:
    QuadratureFailure(const std::string& what, double achieved_error)
        : Error(what + " (achieved error estimate " + std::to_string(achieved_error) + ")"),
          achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

/// Two evaluations that must agree by construction did not.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class ConventionError : public Error {
public:
    using Error::Error;
};

/// Point-pair kernel evaluated on its diagonal singularity.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Group sum requested outside its half-plane of absolute convergence.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

class ClassViolation : public Error {
public:
    using Error::Error;
};

class UnknownSuite : public Error {
public:
    using Error::Error;
};

}  // namespace poincare
