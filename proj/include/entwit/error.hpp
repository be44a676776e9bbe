#pragma once

#include <stdexcept>

namespace entwit {

// Operands live on incompatible (composite) spaces.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An observable was required but the matrix deviates from its adjoint.
class NotHermitian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A state or parameter set violates normalization, positivity or range constraints.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace entwit
