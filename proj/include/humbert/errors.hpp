#pragma once

#include <stdexcept>
#include <string>

namespace humbert {

/// Base class for all evaluation failures raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the domain of the requested operation or representation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Series/continued-fraction did not reach the requested tolerance within the cap.
class NonConvergent : public Error {
public:
    using Error::Error;
};

/// A lower parameter is a non-positive integer, making the series singular.
class SingularParameter : public Error {
public:
    using Error::Error;
};

/// Argument hit a pole of the function (e.g. digamma at a non-positive integer).
class PoleError : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the convergence domain of the series route.
class OutOfDomain : public DomainError {
public:
    using DomainError::DomainError;
};

/// Two successive quadrature refinements disagree beyond the target tolerance.
class QuadratureNotConverged : public Error {
public:
    using Error::Error;
};

/// Laplace image requested within the guard distance of its singular set.
class SingularPoint : public DomainError {
public:
    using DomainError::DomainError;
};

/// Inversion contour cannot be separated from the image's singularities.
class ContourError : public Error {
public:
    using Error::Error;
};

/// Node doubling changed the inverse-transform value beyond the allowed budget.
class NotConverged : public Error {
public:
    using Error::Error;
};

/// No asymptotic branch matches the requested point.
class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A parameter combination excluded by an asymptotic theorem (Gamma pole).
class ParameterPole : public Error {
public:
    using Error::Error;
};

/// Root bracket does not enclose a sign change.
class NoBracket : public Error {
public:
    using Error::Error;
};

} // namespace humbert
