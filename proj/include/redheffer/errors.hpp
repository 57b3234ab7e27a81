#pragma once

#include <stdexcept>

namespace redheffer {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The cover relation of a would-be poset contains a directed cycle.
class CycleError : public Error {
public:
    using Error::Error;
};

/// No element of the poset lies below all others.
class NoZeroError : public Error {
public:
    using Error::Error;
};

/// An element identifier occurs more than once.
class DuplicateElementError : public Error {
public:
    using Error::Error;
};

/// A poset description (JSON file or cover list) is malformed.
class PosetFormatError : public Error {
public:
    using Error::Error;
};

/// A size or enumeration limit was exceeded.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// A matrix is too large for the requested algorithm.
class DimensionCapError : public Error {
public:
    using Error::Error;
};

/// Operands have incompatible dimensions.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// The matrix (or the Moebius sum defining its determinant) is singular.
class SingularError : public Error {
public:
    using Error::Error;
};

/// A rank-1 update would make the matrix singular: 1 + v^T B^-1 u = 0.
class SingularUpdateError : public Error {
public:
    using Error::Error;
};

} // namespace redheffer
