#pragma once

#include <stdexcept>
#include <string>

namespace hnid {

// Raised when an operation is evaluated outside its mathematical domain:
// negative harmonic index, pole of a generalized harmonic number, zero
// denominator Pochhammer inside a summation range, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Division by a value whose (value part) is exactly zero.
class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

// An identity or family was asked to evaluate at parameters that violate one
// of its stated constraints. `constraint()` carries the constraint's name.
class ConstraintViolation : public DomainError {
 public:
  ConstraintViolation(std::string constraint, const std::string& what)
      : DomainError(what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace hnid
