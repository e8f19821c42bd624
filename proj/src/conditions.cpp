#include "ksgap/conditions.hpp"

namespace ksgap {

namespace {

void check_level(const MarkedPoset& m, int k) {
  if (k < 1 || k > m.n() - 1)
    throw IndexOutOfRange("level " + std::to_string(k) + " outside [1, " +
                          std::to_string(m.n() - 1) + "]");
}

}  // namespace

bool crowd_above(const MarkedPoset& m, int k) {
  check_level(m, k);
  const Poset& p = m.poset();
  const int n = m.n();
  const int above_y = m.above_y().size();
  const ElementSet zs = m.between() | m.above_x_incomp_y();
  for (int z : zs.elements())
    if (p.strictly_below(z).size() + above_y <= n - k) return false;
  return true;
}

bool crowd_below(const MarkedPoset& m, int k) {
  check_level(m, k);
  const Poset& p = m.poset();
  const int n = m.n();
  const int below_x = m.below_x().size();
  const ElementSet zs = m.between() | m.below_y_incomp_x();
  for (int z : zs.elements())
    if (p.strictly_above(z).size() + below_x <= n - k) return false;
  return true;
}

bool thick_below_y(const MarkedPoset& m, int k) {
  check_level(m, k);
  const Poset& p = m.poset();
  if (p.strictly_below(m.y()).with(m.x()).size() <= k) return false;
  for (int z : m.below_x().elements())
    if (p.open_interval(z, m.y()).with(m.x()).size() <= k) return false;
  return true;
}

bool thick_above_x(const MarkedPoset& m, int k) {
  check_level(m, k);
  const Poset& p = m.poset();
  if (p.strictly_above(m.x()).with(m.y()).size() <= k) return false;
  for (int z : m.above_y().elements())
    if (p.open_interval(m.x(), z).with(m.y()).size() <= k) return false;
  return true;
}

bool cross_chain_thick(const MarkedPoset& m, int k) {
  check_level(m, k);
  const Poset& p = m.poset();
  const ElementSet lows = m.below_y_incomp_x();
  const ElementSet highs = m.above_x_incomp_y();
  for (int z : lows.elements()) {
    const ElementSet uppers = p.strictly_above(z) & highs;
    for (int zp : uppers.elements())
      if (p.open_interval(z, m.y()).size() +
              p.open_interval(m.x(), zp).size() <=
          k - 2)
        return false;
  }
  return true;
}

ConditionProfile condition_profile(const MarkedPoset& m, int k) {
  ConditionProfile out;
  out.crowd_above = crowd_above(m, k);
  out.crowd_below = crowd_below(m, k);
  out.thick_below_y = thick_below_y(m, k);
  out.thick_above_x = thick_above_x(m, k);
  out.cross_chain_thick = cross_chain_thick(m, k);
  out.between_empty = m.between().empty();
  out.incomp_both_empty = m.incomp_both().empty();
  return out;
}

bool gap_count_vanishes(const MarkedPoset& m, int k) {
  check_level(m, k);
  const int n = m.n();
  if (m.below_x().size() + m.above_y().size() > n - k - 1) return true;
  return m.between().size() > k - 1;
}

namespace {

// In extension f, does z sit at an interior position with both neighbours
// incomparable to z?
bool loose_in(const Poset& p, const LinearExtension& f, int z) {
  const int r = f.position(z);
  if (r < 1 || r > p.size() - 2) return false;
  return p.incomparable(z, f.at(r - 1)) && p.incomparable(z, f.at(r + 1));
}

std::optional<int> flat_witness_impl(const MarkedPoset& m, int k,
                                     const std::vector<LinearExtension>& all) {
  const Poset& p = m.poset();
  bool seen = false;
  bool ok_x = true;
  bool ok_y = true;
  for (const LinearExtension& f : all) {
    if (f.gap(m.x(), m.y()) != k) continue;
    seen = true;
    ok_x = ok_x && loose_in(p, f, m.x());
    ok_y = ok_y && loose_in(p, f, m.y());
    if (!ok_x && !ok_y) return std::nullopt;
  }
  if (!seen) return std::nullopt;
  if (ok_x) return m.x();
  if (ok_y) return m.y();
  return std::nullopt;
}

}  // namespace

std::optional<int> flat_witness(const MarkedPoset& m, int k) {
  check_level(m, k);
  bool seen = false;
  bool ok_x = true;
  bool ok_y = true;
  const Poset& p = m.poset();
  enumerate_extensions(p, [&](const LinearExtension& f) {
    if (f.gap(m.x(), m.y()) != k) return true;
    seen = true;
    ok_x = ok_x && loose_in(p, f, m.x());
    ok_y = ok_y && loose_in(p, f, m.y());
    return ok_x || ok_y;
  });
  if (!seen || (!ok_x && !ok_y)) return std::nullopt;
  return ok_x ? std::optional<int>(m.x()) : std::optional<int>(m.y());
}

std::optional<int> flat_witness(const MarkedPoset& m, int k,
                                const std::vector<LinearExtension>& all) {
  check_level(m, k);
  return flat_witness_impl(m, k, all);
}

bool doubling_structure(const MarkedPoset& m, int k) {
  check_level(m, k);
  if (!m.between().empty() || !m.incomp_both().empty()) return false;
  const Poset& p = m.poset();
  const ElementSet lower = m.below_x() | m.below_y_incomp_x();
  const ElementSet upper = m.above_y() | m.above_x_incomp_y();
  if (lower.size() < k || upper.size() < k) return false;

  std::vector<int> lower_map;
  std::vector<int> upper_map;
  const Poset pl = p.induced(lower, &lower_map);
  const Poset pu = p.induced(upper, &upper_map);
  // tops[i] / bottoms[j]: every element that appears among the last i + 1 /
  // first j + 1 entries of some extension of the respective side.
  std::vector<ElementSet> tops(static_cast<std::size_t>(k));
  std::vector<ElementSet> bottoms(static_cast<std::size_t>(k));
  enumerate_extensions(pl, [&](const LinearExtension& f) {
    for (int i = 1; i <= k; ++i)
      tops[static_cast<std::size_t>(i - 1)] |= ElementSet::single(
          lower_map[static_cast<std::size_t>(f.at(f.size() - i))]);
    return true;
  });
  enumerate_extensions(pu, [&](const LinearExtension& f) {
    for (int j = 1; j <= k; ++j)
      bottoms[static_cast<std::size_t>(j - 1)] |= ElementSet::single(
          upper_map[static_cast<std::size_t>(f.at(j - 1))]);
    return true;
  });
  // The loops above record, per depth i, only the element at distance i
  // from the relevant end; the set of elements reachable within the last i
  // (first j) positions is the running union over depths.
  for (int i = 1; i <= k - 1; ++i) {
    tops[static_cast<std::size_t>(i)] |= tops[static_cast<std::size_t>(i - 1)];
    bottoms[static_cast<std::size_t>(i)] |=
        bottoms[static_cast<std::size_t>(i - 1)];
  }
  for (int z : tops[static_cast<std::size_t>(k - 1)].elements())
    if (!p.incomparable(z, m.x())) return false;
  for (int z : bottoms[static_cast<std::size_t>(k - 1)].elements())
    if (!p.incomparable(z, m.y())) return false;
  for (int i = 1; i <= k - 1; ++i)
    for (int u : tops[static_cast<std::size_t>(i - 1)].elements())
      for (int w : bottoms[static_cast<std::size_t>(k - i - 1)].elements())
        if (!p.incomparable(u, w)) return false;
  return true;
}

}  // namespace ksgap
