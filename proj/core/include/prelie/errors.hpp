#pragma once

#include <stdexcept>
#include <string>

namespace prelie {

/// Input outside an operation's mathematical domain (empty degree, single
/// vertex decomposition, planar order on a non-planar tree, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested degree exceeds a configured cap. A domain error with its own
/// type so callers can report caps separately.
class DegreeCapError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Planar and non-planar sums mixed in one operation.
class FlavorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace prelie
