#pragma once

#include "ksgap/numbers.hpp"
#include "ksgap/poset.hpp"

#include <functional>
#include <vector>

namespace ksgap {

// A total order on the elements of a poset that refines the poset order.
// order()[i] is the element at position i (0-based); rank(z) is 1-based.
class LinearExtension {
 public:
  // Validates that `order` is a permutation of {0, ..., n-1} refining p;
  // throws NotAnExtension otherwise (IndexOutOfRange for stray indices).
  LinearExtension(const Poset& p, std::vector<int> order);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int at(int position) const;            // element at 0-based position
  int position(int z) const;             // 0-based position of element z
  int rank(int z) const { return position(z) + 1; }  // 1-based
  // rank(y) - rank(x); negative when y comes first.
  int gap(int x, int y) const { return position(y) - position(x); }

  bool operator==(const LinearExtension& o) const {
    return order_ == o.order_;
  }

 private:
  friend class ExtensionEnumerator;
  LinearExtension() = default;

  std::vector<int> order_;
  std::vector<int> pos_;
};

// Calls fn for every linear extension of p in lexicographic order of the
// order word.  The LinearExtension handed to fn refers to an internal
// buffer that is rewritten between calls: copy it to keep it.  Returning
// false from fn stops the enumeration early.
void enumerate_extensions(
    const Poset& p, const std::function<bool(const LinearExtension&)>& fn);

// All linear extensions in lexicographic order.  Intended for small posets;
// throws BadParameters once more than `limit` extensions have been produced.
std::vector<LinearExtension> all_extensions(const Poset& p,
                                            std::uint64_t limit = 20'000'000);

// The number of linear extensions, by dynamic programming over lower sets
// (no enumeration).
BigInt count_extensions(const Poset& p);

// For k in [1, n-1], counts[k] is the number of linear extensions in which
// y sits exactly k positions above x.  Extensions with y below x are not
// counted anywhere.
class GapSequence {
 public:
  GapSequence(int n, std::vector<BigInt> counts);  // counts.size() == n-1

  int n() const { return n_; }
  // 1-based: k in [1, n-1], else IndexOutOfRange.
  const BigInt& at(int k) const;
  BigInt total() const;
  // Smallest / largest k with a nonzero count; 0 if all counts vanish.
  int min_support() const;
  int max_support() const;

  bool operator==(const GapSequence& o) const = default;

 private:
  int n_ = 0;
  std::vector<BigInt> counts_;

  friend struct GapSequenceAccess;
};

// Computes the gap sequence of m by enumerating all extensions.
GapSequence gap_sequence(const MarkedPoset& m);

// An extension achieving the smallest possible gap, 1 + |{z : x < z < y}|:
// exactly the elements strictly between x and y in the poset order separate
// them in the output.
LinearExtension minimal_gap_extension(const MarkedPoset& m);

// An extension that lists S first, then everything else, then T.  Throws
// NotLowerSet / NotUpperSet if S / T is not downward / upward closed, and
// Overlap if they intersect.  Each block is ordered lexicographically.
LinearExtension boundary_extension(const Poset& p, ElementSet s, ElementSet t);

// Rearranges f into an extension in which z1 and z2 are adjacent (z1
// directly below z2), moving only elements strictly between their
// positions.  Throws NotCoverPair unless z2 covers z1, NotAnExtension if f
// does not extend p.
LinearExtension adjacent_pair_extension(const Poset& p,
                                        const LinearExtension& f, int z1,
                                        int z2);

// Assembles the gap-(|omega| + 1) extension determined by an extension
// f_minus of the elements below x or (below y and incomparable to x), an
// extension f_plus of the elements above y or (above x and incomparable to
// y), and a bit word omega: reading omega left to right, a 0 inserts the
// next element of f_minus's tail and a 1 the next element of f_plus's head
// between x and y.  Throws PartitionViolated if m has elements strictly
// between x and y or incomparable to both, NotAnExtension if the inputs do
// not extend the induced orders or the assembled word does not extend p.
LinearExtension doubling_reconstruct(const MarkedPoset& m,
                                     const std::vector<int>& f_minus,
                                     const std::vector<int>& f_plus,
                                     const std::vector<int>& omega);

}  // namespace ksgap
