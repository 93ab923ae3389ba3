#pragma once

#include <stdexcept>
#include <string>

namespace eamsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (e.g. an EAM label
/// outside the window of the molecule it is used with).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structurally valid request the model does not define (even arm counts,
/// N != 3 for the three-arm-only reductions).
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

/// A numerical contract was broken: non-Hermitian operator, state norm
/// drift, density operator with negative weight, and so on.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Two objects that must share a LabeledBasis do not, or a label is missing.
class BasisMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace eamsim
