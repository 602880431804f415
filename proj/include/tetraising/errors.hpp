#pragma once

#include <stdexcept>
#include <string>

namespace tetraising {

// Malformed input: bad edge ids, wrong coupling count, unknown names.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well formed but the requested quantity does not exist there
// (a pole, a flat tetrahedron, a degenerate configuration). The CLI maps
// every DomainError to exit status 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Squared volume V^2 <= 0: no Euclidean tetrahedron with these lengths.
class LorentzianRegime : public DomainError {
 public:
  using DomainError::DomainError;
};

class Unsupported : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace tetraising
