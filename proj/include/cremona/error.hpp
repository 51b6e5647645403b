#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

// Malformed or mismatched input: wrong variable lists, wrong lengths, bad JSON.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's domain (zero divisor, rank != 3, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A postcondition the library itself guarantees did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Randomized computations whose trials disagreed.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cremona
