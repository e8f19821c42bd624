#pragma once

#include "ksgap/elementset.hpp"
#include "ksgap/errors.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ksgap {

// A finite poset on elements {0, ..., n-1}, n <= 64.  The strict order is
// stored as per-element bitmasks of the elements strictly above/below, kept
// transitively closed at all times.  Labels are display-only; when none are
// set, element z renders as "e{z}".
class Poset {
 public:
  Poset() = default;

  // The strict order is the transitive closure of the given pairs, each read
  // as first < second.  Throws IndexOutOfRange for indices outside [0, n),
  // CycleDetected if closure would relate an element to itself (including
  // pairs (a, a)), BadParameters for n outside [0, 64] or a label vector
  // whose size is neither 0 nor n.
  static Poset from_cover_relations(
      int n, const std::vector<std::pair<int, int>>& relations,
      std::vector<std::string> labels = {});

  // Builds from per-element above-masks that are already transitively closed
  // and irreflexive; throws BadParameters if they are not.
  static Poset from_closure(int n, const std::vector<std::uint64_t>& above,
                            std::vector<std::string> labels = {});

  int size() const { return n_; }

  // a < b in the strict order.
  bool less(int a, int b) const { return (above_[a] >> b) & 1u; }
  bool leq(int a, int b) const { return a == b || less(a, b); }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
  bool incomparable(int a, int b) const {
    return a != b && !comparable(a, b);
  }

  ElementSet all() const { return ElementSet::full(n_); }
  ElementSet strictly_above(int z) const { return ElementSet(above_[z]); }
  ElementSet strictly_below(int z) const { return ElementSet(below_[z]); }
  // Elements w != z with w incomparable to z.
  ElementSet incomparables(int z) const {
    return (all() - ElementSet(above_[z] | below_[z])).without(z);
  }
  // {z : a < z < b}.
  ElementSet open_interval(int a, int b) const {
    return ElementSet(above_[a] & below_[b]);
  }

  bool is_minimal(int z) const { return below_[z] == 0; }
  bool is_maximal(int z) const { return above_[z] == 0; }
  ElementSet minimal_elements() const;
  ElementSet maximal_elements() const;

  // s is downward closed.
  bool is_lower_set(ElementSet s) const;
  // s is upward closed.
  bool is_upper_set(ElementSet s) const;

  // b covers a: a < b with nothing strictly between.
  bool covers(int a, int b) const {
    return less(a, b) && (above_[a] & below_[b]) == 0;
  }
  // All cover pairs (a, b), sorted ascending by (a, b).
  std::vector<std::pair<int, int>> cover_relations() const;

  // Same elements, all relations reversed.  Labels are kept.
  Poset dual() const;

  // The induced subposet on s.  New element i corresponds to the i-th
  // smallest original index; if out_map is non-null it receives that list.
  Poset induced(ElementSet s, std::vector<int>* out_map = nullptr) const;

  // All downward-closed subsets, ascending as bitmasks.  Requires n <= 20.
  std::vector<ElementSet> lower_sets() const;
  // All upward-closed subsets, ascending as bitmasks.  Requires n <= 20.
  std::vector<ElementSet> upper_sets() const;

  std::string label(int z) const;
  const std::vector<std::string>& raw_labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  bool operator==(const Poset& o) const;

 private:
  void check_index(int z) const {
    if (z < 0 || z >= n_)
      throw IndexOutOfRange("element index " + std::to_string(z) +
                            " outside [0, " + std::to_string(n_) + ")");
  }

  int n_ = 0;
  std::vector<std::uint64_t> above_;  // above_[z] = mask of {w : z < w}
  std::vector<std::uint64_t> below_;  // below_[z] = mask of {w : w < z}
  std::vector<std::string> labels_;   // empty, or one label per element
};

// A poset with a designated pair (x, y), x distinct from y and y not below
// x, whose rank gaps are under study.
class MarkedPoset {
 public:
  // Throws IndexOutOfRange for bad indices, MarkViolation if x == y or
  // y < x.
  MarkedPoset(Poset p, int x, int y);

  const Poset& poset() const { return p_; }
  int n() const { return p_.size(); }
  int x() const { return x_; }
  int y() const { return y_; }

  // The six regions below partition the elements other than x and y.
  ElementSet below_x() const { return p_.strictly_below(x_); }
  ElementSet above_y() const { return p_.strictly_above(y_); }
  // {z : x < z < y}.
  ElementSet between() const { return p_.open_interval(x_, y_); }
  // {z : z < y, z incomparable to x}.
  ElementSet below_y_incomp_x() const {
    return p_.strictly_below(y_) & p_.incomparables(x_);
  }
  // {z : z > x, z incomparable to y}.
  ElementSet above_x_incomp_y() const {
    return p_.strictly_above(x_) & p_.incomparables(y_);
  }
  // {z : z incomparable to both x and y}.
  ElementSet incomp_both() const {
    return p_.incomparables(x_) & p_.incomparables(y_);
  }

  // The marked poset on the dual order with the pair reversed; rank gaps of
  // the two agree.
  MarkedPoset dual() const { return MarkedPoset(p_.dual(), y_, x_); }

  bool operator==(const MarkedPoset& o) const {
    return x_ == o.x_ && y_ == o.y_ && p_ == o.p_;
  }

 private:
  Poset p_;
  int x_ = 0;
  int y_ = 0;
};

// Appends a new global minimum (below every existing element) if bottom is
// set, then a new global maximum if top is set.  New elements go at the end
// in that order, so existing indices (including the mark) are unchanged.
MarkedPoset add_global_bounds(const MarkedPoset& m, bool bottom, bool top);

// If x is minimal or y is maximal, returns add_global_bounds(m, true, true)
// and sets *augmented (when non-null); otherwise returns m unchanged.  The
// witness solver works over this poset so that x always has something below
// it and y something above it.
MarkedPoset augment_for_witness(const MarkedPoset& m,
                                bool* augmented = nullptr);

// The quotient that collapses the closed span {x} | {z : x < z < y} | {y}
// to a single class and keeps every other element separate.  This is the
// coarsest quotient forced by requiring coordinates x and y to agree: any
// z between x and y is then squeezed to the same value.
struct MergedQuotient {
  Poset quotient;             // poset on the classes
  std::vector<int> class_of;  // size n; class index of each element
  int merged_class = 0;       // the class containing x and y
};

MergedQuotient merge_xy(const MarkedPoset& m);

}  // namespace ksgap
