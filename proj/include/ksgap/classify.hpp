#pragma once

#include "ksgap/linext.hpp"
#include "ksgap/poset.hpp"

#include <vector>

namespace ksgap {

// How the gap count at level k sits inside its sequence.
//
//   Zero      N_k = 0
//   Nonzero   N_k > 0 at a boundary level (k = 1 or k = n-1), where the
//             three-term comparison below is not defined
//   Strict    N_k^2 >  N_{k-1} N_{k+1}
//   Flat      N_{k+1} = N_k = N_{k-1} > 0
//   Doubling  N_{k+1} = 2 N_k = 4 N_{k-1} > 0
//
// For gap sequences of marked posets these five cases are exhaustive: at an
// interior level, equality N_k^2 = N_{k-1} N_{k+1} with N_k > 0 happens
// exactly in the Flat and Doubling patterns.
enum class KClass { Zero, Nonzero, Strict, Flat, Doubling };

const char* to_string(KClass c);

// Classifies level k of a gap sequence.  Throws IndexOutOfRange for k
// outside [1, n-1] and InequalityViolated if the data contradicts the
// guarantees above (log-concavity fails, or equality holds in neither the
// flat nor the doubling pattern) - neither can happen for sequences that
// come from a marked poset.
KClass classify_level(const GapSequence& g, int k);

// Convenience: classify_level(gap_sequence(m), k).
KClass classify_level(const MarkedPoset& m, int k);

// The shape of a gap sequence, as five consecutive (possibly empty)
// segments of [1, n-1] described by inclusive bounds with lo > hi when
// empty:
//
//   head     leading zeros plus the initial strictly-doubling arc
//   rise     strictly increasing part after the head
//   plateau  a maximal run of three or more copies of the maximum
//   fall     strictly decreasing part (starts at the maximum when the run
//            of maxima is shorter than three: a doubled maximum puts its
//            first copy in rise and its second here)
//   tail     trailing zeros
//
// doubling_levels lists every interior k classified as Doubling.
struct ShapeReport {
  struct Segment {
    int lo = 1;
    int hi = 0;
    bool empty() const { return lo > hi; }
    bool operator==(const Segment&) const = default;
  };
  Segment head, rise, plateau, fall, tail;
  std::vector<int> doubling_levels;

  bool operator==(const ShapeReport&) const = default;
};

ShapeReport shape_report(const GapSequence& g);

}  // namespace ksgap
