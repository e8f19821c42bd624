#pragma once

#include "ksgap/numbers.hpp"

#include <vector>

namespace ksgap {

// Row-major matrix over the rationals.  Rows may be empty; all rows of one
// matrix must share a width.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank by exact Gauss-Jordan elimination.
int matrix_rank(RationalMatrix a);

// Dimension of the affine hull of a point set: rank of the differences to
// the first point.  Empty input has dimension -1, a single point 0.
int affine_dimension(const std::vector<RationalPoint>& points);

// Affine dimension of {p + q : p in a, q in b}: the two difference spans
// are stacked and ranked together.  Throws BadParameters if either set is
// empty or ambient dimensions differ.
int affine_dimension_of_sum(const std::vector<RationalPoint>& a,
                            const std::vector<RationalPoint>& b);

struct LinearSolution {
  bool feasible = false;
  // Defined only when feasible: the solution with every non-pivot variable
  // set to zero, pivots chosen at the first nonzero column of each row.
  RationalPoint particular;
  // A basis of the homogeneous solution space (one vector per free column,
  // in ascending column order).
  std::vector<RationalPoint> null_basis;
};

// Solves a v = b exactly.  All rows of a must have length nvar; a and b
// must have equal lengths (BadParameters otherwise).
LinearSolution solve_linear_system(const RationalMatrix& a,
                                   const std::vector<Rational>& b, int nvar);

}  // namespace ksgap
