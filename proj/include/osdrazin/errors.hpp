#pragma once

#include <stdexcept>
#include <string>

namespace osdrazin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree in dimension, scalar variant or modulus.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A field-only operation (rank, solve, Drazin inverse) was asked of a
/// ring that is not a field, e.g. integers modulo a composite.
class UnsupportedRing : public Error {
public:
    using Error::Error;
};

/// The caller's input does not satisfy the stated hypothesis of a
/// construction. Preconditions are always checked.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class IndexTooLarge : public Error {
public:
    using Error::Error;
};

/// A resolvent that the theory guarantees to be invertible turned out
/// singular. Seeing this means there is a bug somewhere.
class SingularResolvent : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A generator produced an instance that fails its own invariant.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace osdrazin
