#pragma once

// Reference implementations for cross-checking the library, written as
// plainly as possible and sharing no code with it: an adjacency-matrix
// relation with its own closure routine, and permutation filtering for
// linear extensions and gap counts.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

struct Relation {
  int n = 0;
  std::vector<std::vector<bool>> lt;  // lt[a][b]: a strictly below b
};

inline Relation close(int n, const std::vector<std::pair<int, int>>& pairs) {
  Relation r;
  r.n = n;
  r.lt.assign(static_cast<size_t>(n),
              std::vector<bool>(static_cast<size_t>(n), false));
  for (const auto& [a, b] : pairs) r.lt[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (r.lt[static_cast<size_t>(a)][static_cast<size_t>(m)] &&
            r.lt[static_cast<size_t>(m)][static_cast<size_t>(b)])
          r.lt[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  for (int a = 0; a < n; ++a)
    if (r.lt[static_cast<size_t>(a)][static_cast<size_t>(a)])
      throw std::invalid_argument("cyclic relation");
  return r;
}

// All orderings (element at position i) compatible with the relation, in
// lexicographic order.
inline std::vector<std::vector<int>> all_orders(const Relation& r) {
  std::vector<int> word(static_cast<size_t>(r.n));
  std::iota(word.begin(), word.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> pos(static_cast<size_t>(r.n));
    for (int i = 0; i < r.n; ++i) pos[static_cast<size_t>(word[static_cast<size_t>(i)])] = i;
    bool ok = true;
    for (int a = 0; a < r.n && ok; ++a)
      for (int b = 0; b < r.n && ok; ++b)
        if (r.lt[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
            pos[static_cast<size_t>(a)] > pos[static_cast<size_t>(b)])
          ok = false;
    if (ok) out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// counts[k] for k >= 1: orders with y exactly k positions after x;
// counts[0]: orders with y before x.
inline std::vector<std::uint64_t> gap_counts(const Relation& r, int x,
                                             int y) {
  std::vector<std::uint64_t> counts(static_cast<size_t>(r.n), 0);
  for (const auto& word : all_orders(r)) {
    int px = 0, py = 0;
    for (int i = 0; i < r.n; ++i) {
      if (word[static_cast<size_t>(i)] == x) px = i;
      if (word[static_cast<size_t>(i)] == y) py = i;
    }
    const int d = py - px;
    ++counts[static_cast<size_t>(d > 0 ? d : 0)];
  }
  return counts;
}

}  // namespace oracle
