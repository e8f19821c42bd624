#include "ksgap/linext.hpp"

#include <algorithm>
#include <unordered_map>

namespace ksgap {

namespace {

// Original indices of a lexicographically-least linearization of the
// induced order on s: repeatedly take the smallest index that is minimal
// among the unplaced elements of s.
std::vector<int> lex_linearization(const Poset& p, ElementSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  std::uint64_t remaining = s.bits();
  while (remaining != 0) {
    int pick = -1;
    for (std::uint64_t rest = remaining; rest != 0; rest &= rest - 1) {
      const int z = std::countr_zero(rest);
      if ((p.strictly_below(z).bits() & remaining) == 0) {
        pick = z;
        break;
      }
    }
    out.push_back(pick);
    remaining &= ~(std::uint64_t{1} << pick);
  }
  return out;
}

void validate_against(const Poset& p, const std::vector<int>& order,
                      const std::vector<int>& pos) {
  const int n = p.size();
  for (int a = 0; a < n; ++a) {
    for (std::uint64_t rest = p.strictly_above(a).bits(); rest != 0;
         rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)])
        throw NotAnExtension("order places " + std::to_string(b) +
                             " before " + std::to_string(a) +
                             " although " + std::to_string(a) + " < " +
                             std::to_string(b));
    }
  }
  (void)order;
}

std::vector<int> positions_of(int n, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != n)
    throw NotAnExtension("order has " + std::to_string(order.size()) +
                         " entries for a poset of size " + std::to_string(n));
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int z = order[static_cast<std::size_t>(i)];
    if (z < 0 || z >= n)
      throw IndexOutOfRange("order entry " + std::to_string(z) +
                            " outside [0, " + std::to_string(n) + ")");
    if (pos[static_cast<std::size_t>(z)] != -1)
      throw NotAnExtension("order repeats element " + std::to_string(z));
    pos[static_cast<std::size_t>(z)] = i;
  }
  return pos;
}

}  // namespace

LinearExtension::LinearExtension(const Poset& p, std::vector<int> order) {
  pos_ = positions_of(p.size(), order);
  validate_against(p, order, pos_);
  order_ = std::move(order);
}

int LinearExtension::at(int position) const {
  if (position < 0 || position >= size())
    throw IndexOutOfRange("position " + std::to_string(position) +
                          " outside [0, " + std::to_string(size()) + ")");
  return order_[static_cast<std::size_t>(position)];
}

int LinearExtension::position(int z) const {
  if (z < 0 || z >= size())
    throw IndexOutOfRange("element " + std::to_string(z) + " outside [0, " +
                          std::to_string(size()) + ")");
  return pos_[static_cast<std::size_t>(z)];
}

class ExtensionEnumerator {
 public:
  static void run(const Poset& p,
                  const std::function<bool(const LinearExtension&)>& fn) {
    const int n = p.size();
    ExtensionEnumerator e;
    e.below_.reserve(static_cast<std::size_t>(n));
    for (int z = 0; z < n; ++z)
      e.below_.push_back(p.strictly_below(z).bits());
    e.ext_.order_.assign(static_cast<std::size_t>(n), 0);
    e.ext_.pos_.assign(static_cast<std::size_t>(n), 0);
    e.fn_ = &fn;
    e.n_ = n;
    e.rec(0, 0);
  }

 private:
  bool rec(int depth, std::uint64_t placed) {
    if (depth == n_) return (*fn_)(ext_);
    for (int z = 0; z < n_; ++z) {
      const std::uint64_t bit = std::uint64_t{1} << z;
      if ((placed & bit) != 0) continue;
      if ((below_[static_cast<std::size_t>(z)] & ~placed) != 0) continue;
      ext_.order_[static_cast<std::size_t>(depth)] = z;
      ext_.pos_[static_cast<std::size_t>(z)] = depth;
      if (!rec(depth + 1, placed | bit)) return false;
    }
    return true;
  }

  std::vector<std::uint64_t> below_;
  LinearExtension ext_;
  const std::function<bool(const LinearExtension&)>* fn_ = nullptr;
  int n_ = 0;
};

void enumerate_extensions(
    const Poset& p, const std::function<bool(const LinearExtension&)>& fn) {
  ExtensionEnumerator::run(p, fn);
}

std::vector<LinearExtension> all_extensions(const Poset& p,
                                            std::uint64_t limit) {
  std::vector<LinearExtension> out;
  enumerate_extensions(p, [&](const LinearExtension& f) {
    if (out.size() >= limit)
      throw BadParameters("poset has more than " + std::to_string(limit) +
                          " linear extensions");
    out.push_back(f);
    return true;
  });
  return out;
}

BigInt count_extensions(const Poset& p) {
  const int n = p.size();
  if (n > 0 && p.all().size() != n)
    throw BadParameters("count_extensions requires n <= 64");
  std::vector<std::uint64_t> below;
  below.reserve(static_cast<std::size_t>(n));
  for (int z = 0; z < n; ++z) below.push_back(p.strictly_below(z).bits());
  const std::uint64_t full = p.all().bits();
  std::unordered_map<std::uint64_t, BigInt> memo;
  const std::function<const BigInt&(std::uint64_t)> go =
      [&](std::uint64_t placed) -> const BigInt& {
    auto it = memo.find(placed);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    if (placed == full) {
      total = 1;
    } else {
      for (int z = 0; z < n; ++z) {
        const std::uint64_t bit = std::uint64_t{1} << z;
        if ((placed & bit) != 0) continue;
        if ((below[static_cast<std::size_t>(z)] & ~placed) != 0) continue;
        total += go(placed | bit);
      }
    }
    return memo.emplace(placed, std::move(total)).first->second;
  };
  return go(0);
}

GapSequence::GapSequence(int n, std::vector<BigInt> counts) : n_(n) {
  if (n < 2 || static_cast<int>(counts.size()) != n - 1)
    throw BadParameters("gap sequence over " + std::to_string(n) +
                        " elements needs exactly " + std::to_string(n - 1) +
                        " counts, got " + std::to_string(counts.size()));
  for (const BigInt& c : counts)
    if (c < 0) throw BadParameters("gap counts cannot be negative");
  counts_ = std::move(counts);
}

const BigInt& GapSequence::at(int k) const {
  if (k < 1 || k > n_ - 1)
    throw IndexOutOfRange("gap index " + std::to_string(k) +
                          " outside [1, " + std::to_string(n_ - 1) + "]");
  return counts_[static_cast<std::size_t>(k - 1)];
}

BigInt GapSequence::total() const {
  BigInt t = 0;
  for (const BigInt& c : counts_) t += c;
  return t;
}

int GapSequence::min_support() const {
  for (int k = 1; k <= n_ - 1; ++k)
    if (counts_[static_cast<std::size_t>(k - 1)] != 0) return k;
  return 0;
}

int GapSequence::max_support() const {
  for (int k = n_ - 1; k >= 1; --k)
    if (counts_[static_cast<std::size_t>(k - 1)] != 0) return k;
  return 0;
}

GapSequence gap_sequence(const MarkedPoset& m) {
  const int n = m.n();
  std::vector<std::uint64_t> raw(static_cast<std::size_t>(n), 0);
  enumerate_extensions(m.poset(), [&](const LinearExtension& f) {
    const int g = f.gap(m.x(), m.y());
    if (g >= 1) ++raw[static_cast<std::size_t>(g)];
    return true;
  });
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k)
    counts.emplace_back(raw[static_cast<std::size_t>(k)]);
  return GapSequence(n, std::move(counts));
}

LinearExtension minimal_gap_extension(const MarkedPoset& m) {
  const Poset& p = m.poset();
  const ElementSet interval = m.between();
  const ElementSet xs = ElementSet::single(m.x());
  const ElementSet ys = ElementSet::single(m.y());
  const ElementSet low =
      ((p.strictly_below(m.y()) - interval - xs) | p.strictly_below(m.x()));
  const ElementSet rest = p.all() - low - interval - xs - ys;
  std::vector<int> order = lex_linearization(p, low);
  order.push_back(m.x());
  for (int z : lex_linearization(p, interval)) order.push_back(z);
  order.push_back(m.y());
  for (int z : lex_linearization(p, rest)) order.push_back(z);
  return LinearExtension(p, std::move(order));
}

LinearExtension boundary_extension(const Poset& p, ElementSet s,
                                   ElementSet t) {
  if ((s.bits() & ~p.all().bits()) != 0 || (t.bits() & ~p.all().bits()) != 0)
    throw IndexOutOfRange("boundary sets mention elements outside the poset");
  if (!p.is_lower_set(s))
    throw NotLowerSet("the prefix set is not downward closed");
  if (!p.is_upper_set(t))
    throw NotUpperSet("the suffix set is not upward closed");
  if (s.intersects(t))
    throw Overlap("the prefix and suffix sets intersect");
  std::vector<int> order = lex_linearization(p, s);
  for (int z : lex_linearization(p, p.all() - s - t)) order.push_back(z);
  for (int z : lex_linearization(p, t)) order.push_back(z);
  return LinearExtension(p, std::move(order));
}

LinearExtension adjacent_pair_extension(const Poset& p,
                                        const LinearExtension& f, int z1,
                                        int z2) {
  if (z1 < 0 || z1 >= p.size() || z2 < 0 || z2 >= p.size())
    throw IndexOutOfRange("cover pair outside [0, " +
                          std::to_string(p.size()) + ")");
  if (!p.covers(z1, z2))
    throw NotCoverPair("element " + std::to_string(z2) +
                       " does not cover " + std::to_string(z1));
  // Revalidate f against p: the pair-squeezing argument below needs it.
  LinearExtension checked(p, f.order());
  const int i = checked.position(z1);
  const int j = checked.position(z2);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(p.size()));
  for (int q = 0; q < i; ++q) order.push_back(checked.at(q));
  // Window elements below z2 can slide in front of z1 (anything both above
  // z1 and below z2 would contradict the cover); the rest slide after z2.
  std::vector<int> after;
  for (int q = i + 1; q < j; ++q) {
    const int w = checked.at(q);
    if (p.less(w, z2))
      order.push_back(w);
    else
      after.push_back(w);
  }
  order.push_back(z1);
  order.push_back(z2);
  for (int w : after) order.push_back(w);
  for (int q = j + 1; q < p.size(); ++q) order.push_back(checked.at(q));
  return LinearExtension(p, std::move(order));
}

namespace {

// Verifies that `word` lists exactly the elements of s and respects p.
void validate_block_extension(const Poset& p, ElementSet s,
                              const std::vector<int>& word,
                              const char* which) {
  ElementSet seen;
  for (int z : word) {
    if (z < 0 || z >= p.size())
      throw IndexOutOfRange(std::string(which) + " mentions element " +
                            std::to_string(z) + " outside the poset");
    if (seen.contains(z))
      throw NotAnExtension(std::string(which) + " repeats element " +
                           std::to_string(z));
    seen |= ElementSet::single(z);
  }
  if (!(seen == s))
    throw NotAnExtension(std::string(which) +
                         " is not a word on the required block");
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (p.less(word[j], word[i]))
        throw NotAnExtension(std::string(which) +
                             " violates the induced order");
}

}  // namespace

LinearExtension doubling_reconstruct(const MarkedPoset& m,
                                     const std::vector<int>& f_minus,
                                     const std::vector<int>& f_plus,
                                     const std::vector<int>& omega) {
  if (!m.between().empty() || !m.incomp_both().empty())
    throw PartitionViolated(
        "reconstruction requires no element strictly between the marked pair "
        "and none incomparable to both");
  const Poset& p = m.poset();
  const ElementSet lower = m.below_x() | m.below_y_incomp_x();
  const ElementSet upper = m.above_y() | m.above_x_incomp_y();
  validate_block_extension(p, lower, f_minus, "lower word");
  validate_block_extension(p, upper, f_plus, "upper word");
  int zeros = 0;
  for (int b : omega) {
    if (b != 0 && b != 1)
      throw BadParameters("insertion word must consist of bits");
    if (b == 0) ++zeros;
  }
  const int ones = static_cast<int>(omega.size()) - zeros;
  if (zeros > static_cast<int>(f_minus.size()))
    throw NotAnExtension("insertion word needs more lower elements than exist");
  if (ones > static_cast<int>(f_plus.size()))
    throw NotAnExtension("insertion word needs more upper elements than exist");
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(p.size()));
  const std::size_t keep = f_minus.size() - static_cast<std::size_t>(zeros);
  for (std::size_t q = 0; q < keep; ++q) order.push_back(f_minus[q]);
  order.push_back(m.x());
  std::size_t from_minus = keep;
  std::size_t from_plus = 0;
  for (int b : omega) {
    if (b == 0)
      order.push_back(f_minus[from_minus++]);
    else
      order.push_back(f_plus[from_plus++]);
  }
  order.push_back(m.y());
  for (std::size_t q = from_plus; q < f_plus.size(); ++q)
    order.push_back(f_plus[q]);
  return LinearExtension(p, std::move(order));
}

}  // namespace ksgap
