#pragma once

#include <stdexcept>
#include <string>

namespace eslab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An object or argument violates a mathematical precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A requested size exceeds the configured enumeration or memory bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

// Two series built over different contexts were combined, or a context
// does not contain a required variable.
class ContextError : public Error {
 public:
  using Error::Error;
};

// Inversion of a series that has no invertible leading term, or a result
// whose valuation falls below the context's Laurent budget.
class ValuationError : public Error {
 public:
  using Error::Error;
};

// A coefficient outside the tracked precision was requested.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A parameter assignment hits a pole of the formula being evaluated.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A term of a bounded sum has a valuation below its declared bound.
class ValuationAssertion : public Error {
 public:
  ValuationAssertion(int index, int actual, int bound)
      : Error("term " + std::to_string(index) + " has valuation " +
              std::to_string(actual) + " below its declared bound " +
              std::to_string(bound)),
        index_(index),
        actual_(actual),
        bound_(bound) {}

  int index() const { return index_; }
  int actual() const { return actual_; }
  int bound() const { return bound_; }

 private:
  int index_;
  int actual_;
  int bound_;
};

}  // namespace eslab
