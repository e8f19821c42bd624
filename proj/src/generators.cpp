#include "ksgap/generators.hpp"

namespace ksgap {

MarkedPoset two_tails_example() {
  const std::vector<std::pair<int, int>> covers = {
      {2, 3}, {3, 1}, {0, 4}, {4, 5}};
  return MarkedPoset(
      Poset::from_cover_relations(6, covers,
                                  {"x", "y", "z1", "z2", "z3", "z4"}),
      0, 1);
}

MarkedPoset chain_ladder_example(int r, int s, int t, int u, int v) {
  if (r < 1 || s < 1 || t < 1 || u < 1 || v < 1)
    throw BadParameters("chain ladder parameters must be positive");
  if (!(v < t && t <= r))
    throw BadParameters("chain ladder requires v < t <= r");
  if (u > s) throw BadParameters("chain ladder requires u <= s");
  const int n = r + s + 2;
  const int x = 0;
  const int y = r + s + 1;
  const auto z = [](int i) { return i; };          // z_i, 1 <= i <= r
  const auto w = [r](int j) { return r + j; };     // w_j, 1 <= j <= s
  std::vector<std::pair<int, int>> covers;
  covers.emplace_back(x, z(1));
  for (int i = 1; i < r; ++i) covers.emplace_back(z(i), z(i + 1));
  for (int j = 1; j < s; ++j) covers.emplace_back(w(j), w(j + 1));
  covers.emplace_back(w(u), z(v));
  covers.emplace_back(w(u), y);
  covers.emplace_back(y, z(t));
  if (u < s) covers.emplace_back(v >= 2 ? z(v - 1) : x, w(u + 1));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  labels.emplace_back("x");
  for (int i = 1; i <= r; ++i) labels.push_back("z" + std::to_string(i));
  for (int j = 1; j <= s; ++j) labels.push_back("w" + std::to_string(j));
  labels.emplace_back("y");
  return MarkedPoset(Poset::from_cover_relations(n, covers, std::move(labels)),
                     x, y);
}

}  // namespace ksgap
