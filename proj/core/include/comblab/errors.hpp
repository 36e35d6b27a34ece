#pragma once

#include <stdexcept>
#include <string>

namespace comblab {

// Caller violated a documented precondition (bad order, index, name, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematical domain violation: sqrt of a series whose constant term is not
// 1, composition with a non-zero constant term, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularDivisionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// a / z^k where one of the first k coefficients of a is non-zero.
class NotDivisibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A formula that must produce a well-defined series did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace comblab
