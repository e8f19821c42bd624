#include "ksgap/poset.hpp"

#include <algorithm>
#include <set>

namespace ksgap {

namespace {

void check_size(int n) {
  if (n < 0 || n > 64)
    throw BadParameters("poset size must lie in [0, 64], got " +
                        std::to_string(n));
}

void check_labels(int n, const std::vector<std::string>& labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw BadParameters("expected " + std::to_string(n) + " labels, got " +
                        std::to_string(labels.size()));
}

}  // namespace

Poset Poset::from_cover_relations(
    int n, const std::vector<std::pair<int, int>>& relations,
    std::vector<std::string> labels) {
  check_size(n);
  check_labels(n, labels);
  std::vector<std::uint64_t> above(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw IndexOutOfRange("relation (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") outside [0, " +
                            std::to_string(n) + ")");
    if (a == b)
      throw CycleDetected("relation (" + std::to_string(a) + ", " +
                          std::to_string(b) + ") relates an element to itself");
    above[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
  }
  // Transitive closure: after processing intermediate vertex m, above[a]
  // holds everything reachable from a through intermediates <= m.
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      if ((above[static_cast<std::size_t>(a)] >> m) & 1u)
        above[static_cast<std::size_t>(a)] |=
            above[static_cast<std::size_t>(m)];
  for (int z = 0; z < n; ++z)
    if ((above[static_cast<std::size_t>(z)] >> z) & 1u)
      throw CycleDetected("relations force " + std::to_string(z) + " < " +
                          std::to_string(z));
  return from_closure(n, above, std::move(labels));
}

Poset Poset::from_closure(int n, const std::vector<std::uint64_t>& above,
                          std::vector<std::string> labels) {
  check_size(n);
  check_labels(n, labels);
  if (static_cast<int>(above.size()) != n)
    throw BadParameters("expected " + std::to_string(n) +
                        " above-masks, got " + std::to_string(above.size()));
  const std::uint64_t universe =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  Poset p;
  p.n_ = n;
  p.above_ = above;
  p.below_.assign(static_cast<std::size_t>(n), 0);
  p.labels_ = std::move(labels);
  for (int a = 0; a < n; ++a) {
    const std::uint64_t row = p.above_[static_cast<std::size_t>(a)];
    if ((row & ~universe) != 0)
      throw BadParameters("above-mask of " + std::to_string(a) +
                          " mentions elements outside [0, " +
                          std::to_string(n) + ")");
    if ((row >> a) & 1u)
      throw BadParameters("above-mask of " + std::to_string(a) +
                          " is not irreflexive");
    for (std::uint64_t rest = row; rest != 0; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      if ((p.above_[static_cast<std::size_t>(b)] & ~row) != 0)
        throw BadParameters("above-masks are not transitively closed at (" +
                            std::to_string(a) + ", " + std::to_string(b) +
                            ")");
      p.below_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
  }
  return p;
}

ElementSet Poset::minimal_elements() const {
  ElementSet out;
  for (int z = 0; z < n_; ++z)
    if (below_[static_cast<std::size_t>(z)] == 0) out |= ElementSet::single(z);
  return out;
}

ElementSet Poset::maximal_elements() const {
  ElementSet out;
  for (int z = 0; z < n_; ++z)
    if (above_[static_cast<std::size_t>(z)] == 0) out |= ElementSet::single(z);
  return out;
}

bool Poset::is_lower_set(ElementSet s) const {
  for (std::uint64_t rest = s.bits(); rest != 0; rest &= rest - 1) {
    const int z = std::countr_zero(rest);
    if ((below_[static_cast<std::size_t>(z)] & ~s.bits()) != 0) return false;
  }
  return true;
}

bool Poset::is_upper_set(ElementSet s) const {
  for (std::uint64_t rest = s.bits(); rest != 0; rest &= rest - 1) {
    const int z = std::countr_zero(rest);
    if ((above_[static_cast<std::size_t>(z)] & ~s.bits()) != 0) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (less(a, b) && (above_[static_cast<std::size_t>(a)] &
                         below_[static_cast<std::size_t>(b)]) == 0)
        out.emplace_back(a, b);
  return out;
}

Poset Poset::dual() const {
  Poset p;
  p.n_ = n_;
  p.above_ = below_;
  p.below_ = above_;
  p.labels_ = labels_;
  return p;
}

Poset Poset::induced(ElementSet s, std::vector<int>* out_map) const {
  if ((s.bits() & ~all().bits()) != 0)
    throw IndexOutOfRange("induced subset mentions elements outside the poset");
  const std::vector<int> keep = s.elements();
  const int m = static_cast<int>(keep.size());
  std::vector<std::uint64_t> above(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (less(keep[static_cast<std::size_t>(i)],
               keep[static_cast<std::size_t>(j)]))
        above[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.reserve(static_cast<std::size_t>(m));
    for (int z : keep) labels.push_back(labels_[static_cast<std::size_t>(z)]);
  }
  if (out_map != nullptr) *out_map = keep;
  return from_closure(m, above, std::move(labels));
}

std::vector<ElementSet> Poset::lower_sets() const {
  if (n_ > 20)
    throw BadParameters("lower-set enumeration is limited to 20 elements");
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_); ++mask)
    if (is_lower_set(ElementSet(mask))) out.emplace_back(mask);
  return out;
}

std::vector<ElementSet> Poset::upper_sets() const {
  if (n_ > 20)
    throw BadParameters("upper-set enumeration is limited to 20 elements");
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_); ++mask)
    if (is_upper_set(ElementSet(mask))) out.emplace_back(mask);
  return out;
}

std::string Poset::label(int z) const {
  check_index(z);
  if (labels_.empty()) return "e" + std::to_string(z);
  return labels_[static_cast<std::size_t>(z)];
}

void Poset::set_labels(std::vector<std::string> labels) {
  check_labels(n_, labels);
  labels_ = std::move(labels);
}

bool Poset::operator==(const Poset& o) const {
  if (n_ != o.n_ || above_ != o.above_) return false;
  for (int z = 0; z < n_; ++z)
    if (label(z) != o.label(z)) return false;
  return true;
}

MarkedPoset::MarkedPoset(Poset p, int x, int y) : p_(std::move(p)) {
  const int n = p_.size();
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw IndexOutOfRange("marked pair (" + std::to_string(x) + ", " +
                          std::to_string(y) + ") outside [0, " +
                          std::to_string(n) + ")");
  if (x == y)
    throw MarkViolation("marked pair must be two distinct elements");
  if (p_.less(y, x))
    throw MarkViolation("marked pair requires that y is not below x");
  x_ = x;
  y_ = y;
}

namespace {

std::string fresh_label(const std::vector<std::string>& taken,
                        std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end())
    base += "_";
  return base;
}

}  // namespace

MarkedPoset add_global_bounds(const MarkedPoset& m, bool bottom, bool top) {
  const Poset& p = m.poset();
  const int n = p.size();
  const int extra = (bottom ? 1 : 0) + (top ? 1 : 0);
  if (n + extra > 64)
    throw BadParameters("adding global bounds would exceed 64 elements");
  const int nn = n + extra;
  const int bot = bottom ? n : -1;
  const int topi = top ? n + (bottom ? 1 : 0) : -1;
  std::vector<std::pair<int, int>> rel = p.cover_relations();
  if (bottom)
    for (int z = 0; z < nn; ++z)
      if (z != bot) rel.emplace_back(bot, z);
  if (top)
    for (int z = 0; z < nn; ++z)
      if (z != topi) rel.emplace_back(z, topi);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(nn));
  for (int z = 0; z < n; ++z) labels.push_back(p.label(z));
  if (bottom) labels.push_back(fresh_label(labels, "_bot"));
  if (top) labels.push_back(fresh_label(labels, "_top"));
  return MarkedPoset(Poset::from_cover_relations(nn, rel, std::move(labels)),
                     m.x(), m.y());
}

MarkedPoset augment_for_witness(const MarkedPoset& m, bool* augmented) {
  const bool need = m.below_x().empty() || m.above_y().empty();
  if (augmented != nullptr) *augmented = need;
  if (!need) return m;
  return add_global_bounds(m, true, true);
}

MergedQuotient merge_xy(const MarkedPoset& m) {
  const Poset& p = m.poset();
  const int n = p.size();
  const ElementSet block =
      m.between() | ElementSet::single(m.x()) | ElementSet::single(m.y());
  MergedQuotient out;
  out.class_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> rep;  // representative original element of each class
  for (int z = 0; z < n; ++z) {
    if (block.contains(z) && z != m.x()) continue;
    out.class_of[static_cast<std::size_t>(z)] = static_cast<int>(rep.size());
    rep.push_back(z);
  }
  for (int z = 0; z < n; ++z)
    if (block.contains(z))
      out.class_of[static_cast<std::size_t>(z)] =
          out.class_of[static_cast<std::size_t>(m.x())];
  out.merged_class = out.class_of[static_cast<std::size_t>(m.x())];
  const int q = static_cast<int>(rep.size());
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.less(a, b)) {
        const int ca = out.class_of[static_cast<std::size_t>(a)];
        const int cb = out.class_of[static_cast<std::size_t>(b)];
        if (ca != cb) rel.emplace_back(ca, cb);
      }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(q));
  for (int c = 0; c < q; ++c) {
    if (c == out.merged_class)
      labels.push_back(p.label(m.x()) + "_" + p.label(m.y()));
    else
      labels.push_back(p.label(rep[static_cast<std::size_t>(c)]));
  }
  // A cycle among classes would mean the collapse is inconsistent with the
  // order; that cannot happen when the whole span between x and y is merged,
  // but from_cover_relations still guards it.
  out.quotient = Poset::from_cover_relations(q, rel, std::move(labels));
  return out;
}

}  // namespace ksgap
