#pragma once

#include <stdexcept>

namespace qck {

// Shapes that do not fit together (non-square input, mismatched dimensions,
// wrong coefficient-vector length).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input that violates a stated precondition (e.g. a non-Hermitian matrix
// handed to a Hermitian eigensolver, a trace that is not 1).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qck
