#pragma once

#include <stdexcept>
#include <string>

namespace fracschro {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested improper integral does not converge.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Invalid discretisation or check parameters (quadrature spec, windows, dt lists).
class SpecError : public Error {
public:
    using Error::Error;
};

/// Operands that do not belong together, e.g. wave functions on different grids.
class ContractError : public Error {
public:
    using Error::Error;
};

/// A numerical kernel (eigensolver, positivity test) failed.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Explicit time stepping outside its stability region.
class StabilityError : public Error {
public:
    using Error::Error;
};

/// Input for which a normalised check is undefined (zero vector).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace fracschro
