#pragma once

#include <stdexcept>
#include <string>

namespace ksgap {

// Root of the library's exception hierarchy.  Every failure the library can
// signal derives from Error, so callers may catch either the precise type or
// the family as a whole.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The reflexive-transitive closure of the given relations would force z < z.
class CycleDetected : public Error {
 public:
  using Error::Error;
};

// An element index is outside [0, n) or a position index k is outside its
// documented range.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// The designated pair (x, y) fails the marking requirement: x and y must be
// distinct and y must not lie below x.
class MarkViolation : public Error {
 public:
  using Error::Error;
};

// A set that must be downward closed is not.
class NotLowerSet : public Error {
 public:
  using Error::Error;
};

// A set that must be upward closed is not.
class NotUpperSet : public Error {
 public:
  using Error::Error;
};

// Two sets that must be disjoint intersect.
class Overlap : public Error {
 public:
  using Error::Error;
};

// The requested pair (z1, z2) is not a cover: z2 must cover z1.
class NotCoverPair : public Error {
 public:
  using Error::Error;
};

// A construction requires the incomparable-to-both and strictly-between
// regions of the marked pair to be empty, and they are not.
class PartitionViolated : public Error {
 public:
  using Error::Error;
};

// A provided or assembled total order is not a linear extension of the
// relevant (sub)poset.
class NotAnExtension : public Error {
 public:
  using Error::Error;
};

// Arguments fail a documented precondition (size bounds, parameter ranges,
// inconsistent options, ...).
class BadParameters : public Error {
 public:
  using Error::Error;
};

// A direction handed to the extremality test lies outside the hyperplane
// u_x = u_y in which the test is defined.
class NotInV : public Error {
 public:
  using Error::Error;
};

// A computed gap sequence violates the log-concavity inequality.  This is an
// internal-consistency failure: it can only fire if enumeration is broken.
class InequalityViolated : public Error {
 public:
  using Error::Error;
};

// Textual poset input could not be parsed.  Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Command-line arguments were malformed or inconsistent.
class BadFlags : public Error {
 public:
  using Error::Error;
};

}  // namespace ksgap
