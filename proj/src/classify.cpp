#include "ksgap/classify.hpp"

#include <algorithm>

namespace ksgap {

const char* to_string(KClass c) {
  switch (c) {
    case KClass::Zero: return "Zero";
    case KClass::Nonzero: return "Nonzero";
    case KClass::Strict: return "Strict";
    case KClass::Flat: return "Flat";
    case KClass::Doubling: return "Doubling";
  }
  return "?";
}

KClass classify_level(const GapSequence& g, int k) {
  const BigInt& nk = g.at(k);  // also validates k
  if (k == 1 || k == g.n() - 1) return nk == 0 ? KClass::Zero : KClass::Nonzero;
  const BigInt& lo = g.at(k - 1);
  const BigInt& hi = g.at(k + 1);
  const BigInt square = nk * nk;
  const BigInt product = lo * hi;
  if (nk == 0) {
    if (product != 0)
      throw InequalityViolated("count at level " + std::to_string(k) +
                               " breaks log-concavity");
    return KClass::Zero;
  }
  if (square < product)
    throw InequalityViolated("count at level " + std::to_string(k) +
                             " breaks log-concavity");
  if (hi == nk && nk == lo) return KClass::Flat;
  if (hi == 2 * nk && nk == 2 * lo) return KClass::Doubling;
  if (square == product)
    throw InequalityViolated("equality at level " + std::to_string(k) +
                             " outside the flat and doubling patterns");
  return KClass::Strict;
}

KClass classify_level(const MarkedPoset& m, int k) {
  return classify_level(gap_sequence(m), k);
}

ShapeReport shape_report(const GapSequence& g) {
  const int top = g.n() - 1;
  ShapeReport r;
  const int s = g.min_support();
  if (s == 0) {
    r.head = {1, top};
    r.rise = r.plateau = r.fall = r.tail = {top + 1, top};
    return r;
  }
  const int e = g.max_support();
  for (int k = 2; k <= g.n() - 2; ++k)
    if (classify_level(g, k) == KClass::Doubling) r.doubling_levels.push_back(k);
  const int arc_end =
      r.doubling_levels.empty() ? 0 : r.doubling_levels.back();
  const int head_end = std::max(s - 1, arc_end);
  BigInt peak = 0;
  for (int k = s; k <= e; ++k)
    if (g.at(k) > peak) peak = g.at(k);
  int lo = s;
  while (g.at(lo) != peak) ++lo;
  int hi = e;
  while (g.at(hi) != peak) --hi;
  r.head = {1, head_end};
  if (hi - lo + 1 >= 3) {
    r.rise = {head_end + 1, lo - 1};
    r.plateau = {lo, hi};
    r.fall = {hi + 1, e};
  } else {
    r.rise = {head_end + 1, lo};
    r.plateau = {lo + 1, lo};
    r.fall = {lo + 1, e};
  }
  r.tail = {e + 1, top};
  return r;
}

}  // namespace ksgap
