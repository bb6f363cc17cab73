#pragma once

#include <stdexcept>
#include <string>

namespace canondy {

// Base class for all errors raised by this library on bad input or when a
// requested computation exceeds a configured bound.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A step word has unequal numbers of U and D.
struct UnbalancedWord : Error {
  using Error::Error;
};

// A prefix of a step word has more D than U.
struct NegativePrefix : Error {
  using Error::Error;
};

// A step word contains a character other than U or D.
struct BadCharacter : Error {
  using Error::Error;
};

// Two paths that must have equal semilength do not.
struct SemilengthMismatch : Error {
  using Error::Error;
};

// A permutation's size does not match the object it labels.
struct SizeMismatch : Error {
  using Error::Error;
};

// A rectangular tableau is not standard (wrong entry set, or a row or column
// fails to increase).
struct InvalidTableau : Error {
  using Error::Error;
};

// An n!-sized (or otherwise exhaustive) computation was requested beyond the
// configured bound.
struct BruteForceBoundExceeded : Error {
  using Error::Error;
};

// degree/min_degree queried on the zero polynomial.
struct ZeroPolynomial : Error {
  using Error::Error;
};

// A valley swap was requested at a position that is not a down-up corner.
struct NotAValley : Error {
  using Error::Error;
};

// A valley swap requires the down step's label to exceed the up step's label.
struct LabelOrderViolated : Error {
  using Error::Error;
};

// A poset was requested for a path that is not a compatible bounce-like path
// of the base path.
struct NotInBSet : Error {
  using Error::Error;
};

// The generated relation set is not a strict partial order.
struct CyclicRelation : Error {
  using Error::Error;
};

// A labeling choice passed to the generalized algorithm is not admissible.
struct InvalidChoice : Error {
  using Error::Error;
};

}  // namespace canondy
