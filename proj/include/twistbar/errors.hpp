#pragma once

#include <stdexcept>
#include <string>

namespace twistbar {

// Shape or arity mismatch between composable objects.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A level beyond the truncation of a simplicial object was requested.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Input text could not be parsed, or tables are not rectangular / ids unknown.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well formed but outside the class an operation supports
// (e.g. a non-commutative monoid where commutativity is required).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant was broken. Always a construction bug.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twistbar
