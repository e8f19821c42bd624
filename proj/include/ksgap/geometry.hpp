#pragma once

#include "ksgap/linalg.hpp"
#include "ksgap/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ksgap {

// A polytope in Q^n given by its vertex set.
struct Polytope {
  int ambient = 0;
  std::vector<RationalPoint> vertices;
};

// The slice {t in the order polytope : t_x = t_y}.  Its vertices are the
// 0/1 indicators of the upper sets that are constant on the merged span of
// the marked pair (equivalently: upper-set indicators of merge_xy(m)).
// Dimension: n - 1 - |{z : x < z < y}|.  Requires n <= 20.
Polytope equal_pair_slice(const MarkedPoset& m);

// The face {t in the order polytope : t_x = 0, t_y = 1}.  Its vertices are
// the indicators of upper sets containing y and avoiding x; never empty for
// a marked pair.  Dimension: n - 2 - |below x| - |above y|.  Requires
// n <= 20.
Polytope split_pair_face(const MarkedPoset& m);

// max over vertices of <u, v>.  BadParameters if the polytope is empty or
// sizes mismatch.
Rational support_value(const Polytope& poly, const RationalPoint& u);

// The subpolytope of vertices attaining the support value.
Polytope face_of(const Polytope& poly, const RationalPoint& u);

// Affine dimension (-1 when empty).
int dimension(const Polytope& poly);

// Affine dimension of the pointwise sum {p + q}.
int sum_dimension(const Polytope& a, const Polytope& b);

struct CandidateVector {
  std::string name;
  RationalPoint u;
};

// The fixed catalog of directions tested for k-extremality, all lying in
// the hyperplane u_x = u_y: for each z outside the pair +e_z and -e_z; for
// each ordered pair z != z' outside the pair e_z - e_z'; for each z outside
// the pair e_z - (e_x + e_y)/2 and its negation.  2(n-2) + (n-2)(n-3) +
// 2(n-2) directions, deterministically ordered.
std::vector<CandidateVector> candidate_vectors(const MarkedPoset& m);

// u is k-extreme when the faces it selects are large enough to witness an
// equality case at level k:
//   dim F(K, u) >= n - k - 1,  dim F(L, u) >= k - 2,
//   dim(F(K, u) + F(L, u)) >= n - 3,
// where K is the equal-pair slice and L the split-pair face.  Throws NotInV
// if u_x != u_y, IndexOutOfRange for k outside [2, n-2], BadParameters if u
// has the wrong length.
bool is_k_extreme(const MarkedPoset& m, int k, const RationalPoint& u);

// The linear system harvested from the k-extreme members of the candidate
// catalog: an equality case with ratio parameter a would provide a vector v
// with <u, v> = h_K(u) - a h_L(u) for every k-extreme u.
struct WitnessSystem {
  MarkedPoset domain;      // the poset solved over (possibly augmented)
  bool augmented = false;  // global bounds were appended below x / above y
  int k = 0;
  Rational a;
  std::vector<std::string> row_names;  // candidate names, harvested order
  RationalMatrix rows;
  std::vector<Rational> rhs;
  LinearSolution solution;
};

// Builds and solves the witness system for level k and ratio parameter a
// (a = 1 probes the flat pattern, a = 1/2 the doubling pattern).  When x is
// minimal or y is maximal the poset is first extended by a global bottom
// and top (indices n and n+1) so that the catalog can see below x and above
// y.  Throws IndexOutOfRange for k outside [2, n-2] of the given poset,
// BadParameters unless a > 0.
WitnessSystem solve_witness(const MarkedPoset& m, int k, const Rational& a);

// Whether the witness system stays feasible after adding the structural
// rules an equality-case vector obeys: v_z = 0 below x and on the lower
// beside-region, v_z = 1 - a above y and on the upper beside-region,
// v_z = v_z' for comparable pairs strictly between x and y, and optionally
// (v_x + v_y)/2 = *pair_mid.
bool check_witness_rules(const WitnessSystem& ws,
                         const std::optional<Rational>& pair_mid = {});

}  // namespace ksgap
