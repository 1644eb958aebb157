#pragma once

#include <stdexcept>
#include <string>

namespace dwr {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input matrix failed the Hermiticity tolerance ||H - H*||_F <= 1e-12 * (1 + ||H||_F).
class NotHermitianError : public Error {
public:
    using Error::Error;
};

/// Jacobi iteration exceeded its sweep cap.
class NoConvergenceError : public Error {
public:
    using Error::Error;
};

/// Functional calculus input had an eigenvalue below -1e-10.
class NegativeSpectrumError : public Error {
public:
    using Error::Error;
};

/// Shapes incompatible with the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public DimensionError {
public:
    using DimensionError::DimensionError;
};

class BadDimensionError : public DimensionError {
public:
    using DimensionError::DimensionError;
};

/// Exponent outside the admissible range (s in (0,1), alpha > 1).
class BadExponentError : public Error {
public:
    using Error::Error;
};

/// A block that must be non-zero is zero.
class ZeroBlockError : public Error {
public:
    using Error::Error;
};

class NonPositiveNormError : public Error {
public:
    using Error::Error;
};

/// Malformed input file or value.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Unknown or inapplicable block layout.
class LayoutError : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace dwr
