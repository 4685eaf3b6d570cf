#pragma once

#include <stdexcept>
#include <string>

namespace biorder {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Gamma-function pole hit where the result would be infinite.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Index outside the valid range of a grid or coefficient table.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Grid is malformed or too small for the requested operator.
class GridError : public Error {
public:
    using Error::Error;
};

/// Truncation horizon does not lie beyond the evaluation point.
class HorizonError : public Error {
public:
    using Error::Error;
};

/// Test-function kind not supported by a closed-form oracle.
class UnsupportedKind : public Error {
public:
    using Error::Error;
};

/// Base of the numerical-failure family (CLI exit code 4).
class NumericalError : public Error {
public:
    using Error::Error;
};

class OverflowError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A convergent-mode series did not reach its floor within max_terms.
class TruncationBudgetExceeded : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Convergent summation requested for a formally divergent series.
class DivergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Quadrature or iteration ran out of budget before meeting tolerance.
class NonconvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace biorder
