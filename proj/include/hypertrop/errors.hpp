#pragma once

#include <stdexcept>
#include <string>

namespace hypertrop {

/// Input that violates a documented type invariant (malformed graph, bad
/// lengths, unstable weights, divisor off the allowed support, ...).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The metric graph is homeomorphic to a circle; such graphs are excluded
/// everywhere in the library.
class CircleGraphError : public InvalidInputError {
 public:
  CircleGraphError() : InvalidInputError("metric graph is a circle; circles are excluded") {}
};

/// A requested genus or size lies outside the range the enumerators support.
class UnsupportedRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An operation was called outside its precondition (e.g. a morphism that is
/// not harmonic where harmonicity is required).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hypertrop
