#pragma once

#include "ksgap/poset.hpp"

namespace ksgap {

// The six-element marked poset made of two disjoint chains hung off the
// marked pair: z1 < z2 < y and x < z3 < z4, with x and y incomparable.
// Its gap sequence is (1, 2, 4, 6, 6): doubling at level 2, flat at 4,
// strict at 3, and it stays nonzero through the top level.  Element layout:
// x = 0, y = 1, z1..z4 = 2..5, labels "x", "y", "z1".."z4".
MarkedPoset two_tails_example();

// The parametrized family with a long chain x < z1 < ... < zr threaded by a
// short chain w1 < ... < ws: the covers are
//   x < z1 < ... < zr,   w1 < ... < ws,   w_u < z_v,   w_u < y,   y < z_t,
// plus, when u < s, one tying cover z_{v-1} < w_{u+1} (reading z_0 = x) so
// that every w sits above x or below y; without it the w-tail would be
// incomparable to both marks and the doubling range would collapse.
// Requires r, s, t, u, v >= 1, v < t <= r, u <= s; throws BadParameters
// otherwise.  Element layout: x = 0, z_i = i, w_j = r + j, y = r + s + 1,
// labels "x", "z1".."zr", "w1".."ws", "y".
//
// For v >= 2 the five conditions hold exactly on these ranges:
// crowd_above iff k > t + s, crowd_below iff k > u + v, thick_below_y iff
// k <= u, thick_above_x iff k < t, cross_chain_thick iff k <= v; counts
// vanish iff k > t + s, and level k = 2 is doubling whenever u, v >= 2.
MarkedPoset chain_ladder_example(int r, int s, int t, int u, int v);

}  // namespace ksgap
