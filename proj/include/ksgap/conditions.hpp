#pragma once

#include "ksgap/linext.hpp"
#include "ksgap/poset.hpp"

#include <optional>
#include <vector>

namespace ksgap {

// The five combinatorial conditions at level k, plus the two emptiness
// facts they combine with.  All quantifiers run over possibly empty sets
// and hold vacuously.  Valid k range for every predicate here: [1, n-1].
struct ConditionProfile {
  bool crowd_above = false;       // every z > x with z not >= y has
                                  //   |below z| + |above y| > n - k
  bool crowd_below = false;       // mirror image: every z < y with z not
                                  //   <= x has |above z| + |below x| > n - k
  bool thick_below_y = false;     // |{w : w < y} + x| > k, and every z < x
                                  //   has |{w : z < w < y} + x| > k
  bool thick_above_x = false;     // mirror image: |{w : w > x} + y| > k, and
                                  //   every z > y has |{w : x < w < z} + y| > k
  bool cross_chain_thick = false; // every comparable pair z < z' with z
                                  //   below y beside x and z' above x beside
                                  //   y has |{w : z < w < y}| +
                                  //   |{w : x < w < z'}| > k - 2
  bool between_empty = false;     // no element strictly between x and y
  bool incomp_both_empty = false; // no element incomparable to both
};

bool crowd_above(const MarkedPoset& m, int k);
bool crowd_below(const MarkedPoset& m, int k);
bool thick_below_y(const MarkedPoset& m, int k);
bool thick_above_x(const MarkedPoset& m, int k);
bool cross_chain_thick(const MarkedPoset& m, int k);
ConditionProfile condition_profile(const MarkedPoset& m, int k);

// True iff the count of gap-k extensions is forced to vanish: either the
// elements pinned below x and above y leave no room for a gap as large as
// k, or more than k - 1 elements are pinned strictly between x and y.
// Exact in both directions: the gap-k count is zero iff this returns true.
bool gap_count_vanishes(const MarkedPoset& m, int k);

// Tests whether one endpoint of the marked pair is "loose" in every gap-k
// extension: returns x (preferred) or y if in every extension with gap
// exactly k that endpoint sits at an interior position with both of its
// order-neighbours incomparable to it; std::nullopt if neither endpoint
// qualifies or there is no gap-k extension at all.
std::optional<int> flat_witness(const MarkedPoset& m, int k);
// Same, reusing a precomputed list of all extensions of m's poset.
std::optional<int> flat_witness(const MarkedPoset& m, int k,
                                const std::vector<LinearExtension>& all);

// The structural test behind gap-count doubling at level k: the poset must
// split into the lower side (below x, or below y beside x), the upper side
// (above y, or above x beside y), and the pair itself; both sides must have
// at least k elements; across all linear extensions of the sides, every
// element that can appear among the top k of the lower side must be
// incomparable to x, every element among the bottom k of the upper side
// incomparable to y, and every top-i / bottom-(k-i) combination
// (1 <= i <= k-1) must be elementwise incomparable.
bool doubling_structure(const MarkedPoset& m, int k);

}  // namespace ksgap
