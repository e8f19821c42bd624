#include "ksgap/harness.hpp"

#include "ksgap/classify.hpp"
#include "ksgap/conditions.hpp"
#include "ksgap/errors.hpp"
#include "ksgap/geometry.hpp"
#include "ksgap/poset_io.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

namespace ksgap {

namespace {

// ---------------------------------------------------------------------------
// Generation: build every labeled poset by attaching one element at a time.
// Element i is wired to a down-closed set B and an up-closed set A of the
// elements {0, ..., i-1}, with every member of B already below every member
// of A; that keeps the stored relation transitively closed and reaches each
// labeled poset exactly once (B and A are forced to be the restriction of
// the final below/above sets of i).
// ---------------------------------------------------------------------------

constexpr int kMaxGenSize = 8;

struct GenState {
  int size = 0;
  std::array<std::uint64_t, kMaxGenSize> above{};
  std::array<std::uint64_t, kMaxGenSize> below{};
};

bool down_closed(const GenState& st, std::uint64_t s) {
  for (std::uint64_t t = s; t;) {
    int z = std::countr_zero(t);
    t &= t - 1;
    if (st.below[static_cast<size_t>(z)] & ~s) return false;
  }
  return true;
}

bool up_closed(const GenState& st, std::uint64_t s) {
  for (std::uint64_t t = s; t;) {
    int z = std::countr_zero(t);
    t &= t - 1;
    if (st.above[static_cast<size_t>(z)] & ~s) return false;
  }
  return true;
}

Poset to_poset(const GenState& st) {
  std::vector<std::uint64_t> above(st.above.begin(),
                                   st.above.begin() + st.size);
  return Poset::from_closure(st.size, above);
}

// Depth-first over all attachments from st.size up to target.  The leaf
// callback returns false to stop the whole generation.
bool extend_all(GenState& st, int target,
                const std::function<bool(const GenState&)>& leaf) {
  if (st.size == target) return leaf(st);
  const int i = st.size;
  const auto bit_i = std::uint64_t{1} << i;
  const std::uint64_t full = (std::uint64_t{1} << i) - 1;
  for (std::uint64_t b = 0;; ++b) {
    if (b > full) break;
    if (!down_closed(st, b)) continue;
    std::uint64_t allowed = full & ~b;
    for (std::uint64_t t = b; t;) {
      int z = std::countr_zero(t);
      t &= t - 1;
      allowed &= st.above[static_cast<size_t>(z)];
    }
    // Submasks of allowed in increasing numeric order.
    std::uint64_t a = 0;
    while (true) {
      if (up_closed(st, a)) {
        st.above[static_cast<size_t>(i)] = a;
        st.below[static_cast<size_t>(i)] = b;
        for (std::uint64_t t = b; t;) {
          int z = std::countr_zero(t);
          t &= t - 1;
          st.above[static_cast<size_t>(z)] |= bit_i;
        }
        for (std::uint64_t t = a; t;) {
          int z = std::countr_zero(t);
          t &= t - 1;
          st.below[static_cast<size_t>(z)] |= bit_i;
        }
        st.size = i + 1;
        bool keep = extend_all(st, target, leaf);
        st.size = i;
        st.above[static_cast<size_t>(i)] = 0;
        st.below[static_cast<size_t>(i)] = 0;
        for (std::uint64_t t = b; t;) {
          int z = std::countr_zero(t);
          t &= t - 1;
          st.above[static_cast<size_t>(z)] &= ~bit_i;
        }
        for (std::uint64_t t = a; t;) {
          int z = std::countr_zero(t);
          t &= t - 1;
          st.below[static_cast<size_t>(z)] &= ~bit_i;
        }
        if (!keep) return false;
      }
      a = (a - allowed) & allowed;
      if (a == 0) break;
    }
  }
  return true;
}

void check_gen_size(int n) {
  if (n < 0 || n > kMaxGenSize)
    throw BadParameters("poset generation supports sizes 0 to " +
                        std::to_string(kMaxGenSize) + ", got " +
                        std::to_string(n));
}

std::string fmt_counts(const PairContext& c) {
  std::ostringstream os;
  os << "counts";
  for (int k = 1; k <= c.n() - 1; ++k) os << ' ' << c.gap(k);
  return os.str();
}

GapSequence to_gap_sequence(const PairContext& c) {
  std::vector<BigInt> counts;
  counts.reserve(static_cast<size_t>(c.n() - 1));
  for (int k = 1; k <= c.n() - 1; ++k) counts.emplace_back(c.gap(k));
  return GapSequence(c.n(), std::move(counts));
}

// ---------------------------------------------------------------------------
// Built-in checks.
// ---------------------------------------------------------------------------

void check_logconcave(const PairContext& c, CheckSink& sink) {
  for (int k = 2; k <= c.n() - 2; ++k) {
    if (c.gap(k) * c.gap(k) < c.gap(k - 1) * c.gap(k + 1)) {
      std::ostringstream os;
      os << "k=" << k << ": N_k^2 < N_{k-1} N_{k+1} (" << fmt_counts(c)
         << ')';
      sink.fail(os.str());
    }
  }
}

void check_vanish(const PairContext& c, CheckSink& sink) {
  for (int k = 1; k <= c.n() - 1; ++k) {
    const bool zero = c.gap(k) == 0;
    const bool predicted = gap_count_vanishes(c.m, k);
    if (zero != predicted) {
      std::ostringstream os;
      os << "k=" << k << ": N_k=" << c.gap(k) << " but vanishing test says "
         << (predicted ? "zero" : "nonzero");
      sink.fail(os.str());
    }
  }
}

void check_equality(const PairContext& c, CheckSink& sink) {
  for (int k = 2; k <= c.n() - 2; ++k) {
    if (c.equality_at(k) && !c.flat_at(k) && !c.doubling_at(k)) {
      std::ostringstream os;
      os << "k=" << k
         << ": equality case is neither flat nor doubling (" << fmt_counts(c)
         << ')';
      sink.fail(os.str());
    }
  }
  // The classifier must agree with the raw three-term comparisons.
  GapSequence gs = to_gap_sequence(c);
  for (int k = 1; k <= c.n() - 1; ++k) {
    KClass expected;
    if (c.gap(k) == 0)
      expected = KClass::Zero;
    else if (k == 1 || k == c.n() - 1)
      expected = KClass::Nonzero;
    else if (c.flat_at(k))
      expected = KClass::Flat;
    else if (c.doubling_at(k))
      expected = KClass::Doubling;
    else
      expected = KClass::Strict;
    try {
      KClass got = classify_level(gs, k);
      if (got != expected) {
        std::ostringstream os;
        os << "k=" << k << ": classified " << to_string(got) << ", expected "
           << to_string(expected) << " (" << fmt_counts(c) << ')';
        sink.fail(os.str());
      }
    } catch (const Error& e) {
      std::ostringstream os;
      os << "k=" << k << ": classifier threw: " << e.what();
      sink.fail(os.str());
    }
  }
}

void check_flat(const PairContext& c, CheckSink& sink) {
  for (int k = 2; k <= c.n() - 2; ++k) {
    if (c.gap(k) == 0) continue;
    const bool seq = c.flat_at(k);
    const ConditionProfile cp = condition_profile(c.m, k);
    const bool conds = (cp.crowd_above && cp.thick_below_y) ||
                       (cp.crowd_below && cp.thick_above_x);
    const bool wit = flat_witness(c.m, k, c.extensions).has_value();
    if (seq != conds || conds != wit) {
      std::ostringstream os;
      os << "k=" << k << ": flat sequence=" << seq << " conditions=" << conds
         << " loose-endpoint witness=" << wit << " (" << fmt_counts(c) << ')';
      sink.fail(os.str());
    }
  }
}

void check_double(const PairContext& c, CheckSink& sink) {
  for (int k = 2; k <= c.n() - 2; ++k) {
    if (c.gap(k) == 0) continue;
    const bool seq = c.doubling_at(k);
    const ConditionProfile cp = condition_profile(c.m, k);
    const bool conds = cp.between_empty && cp.incomp_both_empty &&
                       cp.thick_below_y && cp.thick_above_x &&
                       cp.cross_chain_thick;
    const bool structure = doubling_structure(c.m, k);
    if (seq != conds || conds != structure) {
      std::ostringstream os;
      os << "k=" << k << ": doubling sequence=" << seq
         << " conditions=" << conds << " structure=" << structure << " ("
         << fmt_counts(c) << ')';
      sink.fail(os.str());
    }
  }
}

void check_mutex(const PairContext& c, CheckSink& sink) {
  for (int k = 1; k <= c.n() - 1; ++k) {
    const ConditionProfile cp = condition_profile(c.m, k);
    if (cp.crowd_above && cp.thick_above_x)
      sink.fail("k=" + std::to_string(k) +
                ": crowd_above and thick_above_x hold together");
    if (cp.crowd_below && cp.thick_below_y)
      sink.fail("k=" + std::to_string(k) +
                ": crowd_below and thick_below_y hold together");
  }
}

void check_monotone(const PairContext& c, CheckSink& sink) {
  for (int k = 2; k <= c.n() - 1; ++k) {
    if (thick_below_y(c.m, k) && !thick_below_y(c.m, k - 1))
      sink.fail("thick_below_y holds at k=" + std::to_string(k) +
                " but not at k-1");
    if (thick_above_x(c.m, k) && !thick_above_x(c.m, k - 1))
      sink.fail("thick_above_x holds at k=" + std::to_string(k) +
                " but not at k-1");
    if (cross_chain_thick(c.m, k) && !cross_chain_thick(c.m, k - 1))
      sink.fail("cross_chain_thick holds at k=" + std::to_string(k) +
                " but not at k-1");
  }
}

void check_dual(const PairContext& c, CheckSink& sink) {
  const MarkedPoset md = c.m.dual();
  std::vector<std::uint64_t> gd(static_cast<size_t>(c.n()), 0);
  auto tally = [&](const LinearExtension& f) {
    int d = f.position(md.y()) - f.position(md.x());
    ++gd[static_cast<size_t>(d > 0 ? d : 0)];
    return true;
  };
  if (c.dual_extensions) {
    for (const auto& f : *c.dual_extensions) tally(f);
  } else {
    enumerate_extensions(md.poset(), tally);
  }
  for (int k = 0; k <= c.n() - 1; ++k) {
    if (gd[static_cast<size_t>(k)] != c.gap(k)) {
      std::ostringstream os;
      os << "k=" << k << ": dual count " << gd[static_cast<size_t>(k)]
         << " != " << c.gap(k);
      sink.fail(os.str());
    }
  }
  for (int k = 1; k <= c.n() - 1; ++k) {
    const ConditionProfile a = condition_profile(c.m, k);
    const ConditionProfile b = condition_profile(md, k);
    if (a.crowd_above != b.crowd_below || a.crowd_below != b.crowd_above ||
        a.thick_below_y != b.thick_above_x ||
        a.thick_above_x != b.thick_below_y ||
        a.cross_chain_thick != b.cross_chain_thick)
      sink.fail("k=" + std::to_string(k) +
                ": condition profile does not mirror under duality");
  }
}

void check_augment(const PairContext& c, CheckSink& sink) {
  const MarkedPoset ma = add_global_bounds(c.m, true, true);
  std::vector<std::uint64_t> ga(static_cast<size_t>(ma.n()), 0);
  enumerate_extensions(ma.poset(), [&](const LinearExtension& f) {
    int d = f.position(ma.y()) - f.position(ma.x());
    ++ga[static_cast<size_t>(d > 0 ? d : 0)];
    return true;
  });
  for (int k = 0; k <= c.n() - 1; ++k) {
    if (ga[static_cast<size_t>(k)] != c.gap(k)) {
      std::ostringstream os;
      os << "k=" << k << ": count " << ga[static_cast<size_t>(k)]
         << " after adding global bounds, " << c.gap(k) << " before";
      sink.fail(os.str());
    }
  }
  for (int k = c.n(); k <= ma.n() - 1; ++k) {
    if (ga[static_cast<size_t>(k)] != 0)
      sink.fail("k=" + std::to_string(k) +
                ": nonzero count beyond the original range after adding "
                "global bounds");
  }
}

void check_partition(const PairContext& c, CheckSink& sink) {
  const MarkedPoset& m = c.m;
  const std::uint64_t regions[6] = {
      m.below_x().bits(),          m.above_y().bits(),
      m.between().bits(),          m.below_y_incomp_x().bits(),
      m.above_x_incomp_y().bits(), m.incomp_both().bits()};
  std::uint64_t seen = 0;
  bool overlap = false;
  for (std::uint64_t r : regions) {
    if (seen & r) overlap = true;
    seen |= r;
  }
  const std::uint64_t rest =
      m.poset().all().without(m.x()).without(m.y()).bits();
  if (overlap) sink.fail("regions overlap");
  if (seen != rest) sink.fail("regions do not cover the non-marked elements");
}

void check_count(const PosetContext& c, CheckSink& sink) {
  const BigInt counted = count_extensions(c.p);
  if (counted != BigInt(c.extensions.size())) {
    std::ostringstream os;
    os << "extension count " << counted << " != enumerated "
       << c.extensions.size();
    sink.fail(os.str());
  }
}

void check_shape(const PairContext& c, CheckSink& sink) {
  const GapSequence gs = to_gap_sequence(c);
  const ShapeReport s = shape_report(gs);
  auto g = [&](int k) { return c.gap(k); };
  const int n = c.n();

  // Segments tile [1, n-1] in order.
  int cur = 1;
  for (const auto* seg : {&s.head, &s.rise, &s.plateau, &s.fall, &s.tail}) {
    if (seg->empty()) continue;
    if (seg->lo != cur || seg->hi < seg->lo || seg->hi > n - 1) {
      sink.fail("segments do not tile the level range");
      return;
    }
    cur = seg->hi + 1;
  }
  if (cur != n) {
    sink.fail("segments do not cover the level range");
    return;
  }

  // Doubling levels: match the classifier, contiguous, inside the head.
  std::vector<int> dbl;
  for (int k = 2; k <= n - 2; ++k)
    if (c.gap(k) > 0 && c.doubling_at(k)) dbl.push_back(k);
  if (dbl != s.doubling_levels)
    sink.fail("reported doubling levels disagree with the classifier");
  for (size_t i = 1; i < dbl.size(); ++i)
    if (dbl[i] != dbl[i - 1] + 1) sink.fail("doubling levels not contiguous");
  for (int k : dbl)
    if (s.head.empty() || k < s.head.lo || k > s.head.hi)
      sink.fail("doubling level outside the head segment");

  // Zeros sit exactly in the leading part of the head and in the tail.
  for (int k = 1; k <= n - 1; ++k) {
    const bool leading = g(k) == 0 && [&] {
      for (int j = 1; j < k; ++j)
        if (g(j) != 0) return false;
      return true;
    }();
    const bool in_tail = !s.tail.empty() && k >= s.tail.lo;
    if ((g(k) == 0) != (leading || in_tail)) {
      sink.fail("zero levels are not confined to the ends (" + fmt_counts(c) +
                ')');
      break;
    }
  }
  if (!s.tail.empty()) {
    for (int k = s.tail.lo; k <= s.tail.hi; ++k)
      if (g(k) != 0) sink.fail("tail contains a nonzero count");
  }

  // Head: after the leading zeros each count doubles the previous one.
  if (!s.head.empty()) {
    int first_pos = 0;
    for (int k = s.head.lo; k <= s.head.hi; ++k)
      if (g(k) > 0) {
        first_pos = k;
        break;
      }
    if (first_pos > 0)
      for (int k = first_pos + 1; k <= s.head.hi; ++k)
        if (g(k) != 2 * g(k - 1))
          sink.fail("head counts do not double step by step");
  }

  std::uint64_t maxv = 0;
  for (int k = 1; k <= n - 1; ++k) maxv = std::max(maxv, g(k));
  if (!s.plateau.empty()) {
    if (s.plateau.hi - s.plateau.lo + 1 < 3)
      sink.fail("plateau shorter than three levels");
    for (int k = s.plateau.lo; k <= s.plateau.hi; ++k)
      if (g(k) != maxv) sink.fail("plateau level below the maximum");
  }
  if (!s.rise.empty())
    for (int k = s.rise.lo + 1; k <= s.rise.hi; ++k)
      if (g(k) <= g(k - 1)) sink.fail("rise not strictly increasing");
  if (!s.fall.empty()) {
    for (int k = s.fall.lo + 1; k <= s.fall.hi; ++k)
      if (g(k) >= g(k - 1)) sink.fail("fall not strictly decreasing");
    if (g(s.fall.lo) > maxv) sink.fail("fall starts above the maximum");
  }
}

void check_bijection(const PairContext& c, CheckSink& sink) {
  const MarkedPoset& m = c.m;
  const int n = c.n();
  for (int k = 2; k <= n - 2; ++k) {
    if (c.gap(k) == 0 || !c.doubling_at(k)) continue;
    const ElementSet lower = m.below_x() | m.below_y_incomp_x();
    const ElementSet upper = m.above_y() | m.above_x_incomp_y();
    std::vector<int> lmap, umap;
    const Poset lp = m.poset().induced(lower, &lmap);
    const Poset up = m.poset().induced(upper, &umap);
    const auto le = all_extensions(lp);
    const auto ue = all_extensions(up);
    const std::uint64_t block = le.size() * ue.size();
    const int lmax = std::min(k + 1, n - 1);
    for (int l = 1; l <= lmax; ++l) {
      const std::uint64_t expect = (std::uint64_t{1} << (l - 1)) * block;
      if (c.gap(l) != expect) {
        std::ostringstream os;
        os << "doubling at k=" << k << ": N_" << l << '=' << c.gap(l)
           << " != 2^" << (l - 1) << " * " << le.size() << " * " << ue.size();
        sink.fail(os.str());
      }
      // Reassembly is injective and fills the whole level.
      std::set<std::vector<int>> seen;
      std::vector<int> fm, fp, omega(static_cast<size_t>(l - 1));
      for (const auto& fl : le) {
        fm.clear();
        for (int z : fl.order()) fm.push_back(lmap[static_cast<size_t>(z)]);
        for (const auto& fu : ue) {
          fp.clear();
          for (int z : fu.order()) fp.push_back(umap[static_cast<size_t>(z)]);
          for (std::uint64_t w = 0; w < (std::uint64_t{1} << (l - 1)); ++w) {
            for (int i = 0; i < l - 1; ++i)
              omega[static_cast<size_t>(i)] = static_cast<int>((w >> i) & 1);
            try {
              const LinearExtension f = doubling_reconstruct(m, fm, fp, omega);
              if (f.gap(m.x(), m.y()) != l)
                sink.fail("reassembled extension has the wrong gap");
              seen.insert(f.order());
            } catch (const Error& e) {
              sink.fail(std::string("reassembly failed: ") + e.what());
            }
          }
        }
      }
      if (seen.size() != c.gap(l)) {
        std::ostringstream os;
        os << "doubling at k=" << k << ": reassembly reached " << seen.size()
           << " extensions at level " << l << ", count is " << c.gap(l);
        sink.fail(os.str());
      }
    }
  }
}

void check_extend_poset(const PosetContext& c, CheckSink& sink) {
  const Poset& p = c.p;
  const int n = p.size();
  if (n == 0) return;
  for (const ElementSet s : p.lower_sets()) {
    const ElementSet t = p.all() - s;
    try {
      const LinearExtension f = boundary_extension(p, s, t);
      for (int q = 0; q < s.size(); ++q)
        if (!s.contains(f.at(q))) {
          sink.fail("boundary arrangement does not start with the lower set");
          break;
        }
    } catch (const Error& e) {
      sink.fail(std::string("boundary arrangement failed: ") + e.what());
    }
  }
  for (const auto& [z1, z2] : p.cover_relations()) {
    for (const auto& f : c.extensions) {
      try {
        const LinearExtension g = adjacent_pair_extension(p, f, z1, z2);
        if (g.position(z2) != g.position(z1) + 1)
          sink.fail("cover pair not adjacent after rearrangement");
        const int lo = f.position(z1), hi = f.position(z2);
        for (int q = 0; q < n; ++q) {
          if (q >= lo && q <= hi) continue;
          if (g.at(q) != f.at(q)) {
            sink.fail("rearrangement moved an element outside the window");
            break;
          }
        }
      } catch (const Error& e) {
        sink.fail(std::string("rearrangement failed: ") + e.what());
      }
    }
  }
}

void check_extend_pair(const PairContext& c, CheckSink& sink) {
  const MarkedPoset& m = c.m;
  try {
    const LinearExtension f = minimal_gap_extension(m);
    const int expect = 1 + m.between().size();
    if (f.gap(m.x(), m.y()) != expect)
      sink.fail("smallest-gap arrangement has gap " +
                std::to_string(f.gap(m.x(), m.y())) + ", expected " +
                std::to_string(expect));
    for (int q = f.position(m.x()) + 1; q < f.position(m.y()); ++q)
      if (!m.between().contains(f.at(q)))
        sink.fail("smallest-gap arrangement holds a stray element between "
                  "the pair");
    if (c.gap(expect) == 0)
      sink.fail("smallest possible gap has a zero count");
  } catch (const Error& e) {
    sink.fail(std::string("smallest-gap arrangement failed: ") + e.what());
  }
}

// Support values of both polytopes match the combinatorial predictions,
// dimension formulas hold, and in equality cases the catalog of doubling /
// flat directions is k-extreme.
void check_geometry(const PairContext& c, CheckSink& sink) {
  const MarkedPoset& m = c.m;
  const int n = c.n();
  const int x = m.x(), y = m.y();
  const Polytope K = equal_pair_slice(m);
  const Polytope L = split_pair_face(m);

  const int dk = dimension(K), dl = dimension(L);
  if (dk != n - 1 - m.between().size())
    sink.fail("equal-pair slice dimension " + std::to_string(dk) +
              " off the formula");
  if (dl != n - 2 - m.below_x().size() - m.above_y().size())
    sink.fail("split-pair face dimension " + std::to_string(dl) +
              " off the formula");
  if (sum_dimension(K, L) != n - 1)
    sink.fail("sum of the two bodies is not full-dimensional minus one");

  // Vertex models agree with direct upper-set counts.
  const MergedQuotient q = merge_xy(m);
  if (K.vertices.size() != q.quotient.upper_sets().size())
    sink.fail("equal-pair slice vertex count differs from the quotient's "
              "upper sets");
  std::size_t lcount = 0;
  for (const ElementSet u : m.poset().upper_sets())
    if (u.contains(y) && !u.contains(x)) ++lcount;
  if (L.vertices.size() != lcount)
    sink.fail("split-pair face vertex count differs from the direct count");
  auto monotone = [&](const RationalPoint& t) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (m.poset().less(a, b) && t[static_cast<size_t>(a)] >
                                        t[static_cast<size_t>(b)])
          return false;
    return true;
  };
  for (const auto& t : K.vertices)
    if (!monotone(t) || t[static_cast<size_t>(x)] != t[static_cast<size_t>(y)])
      sink.fail("equal-pair slice vertex violates its constraints");
  for (const auto& t : L.vertices)
    if (!monotone(t) || t[static_cast<size_t>(x)] != 0 ||
        t[static_cast<size_t>(y)] != 1)
      sink.fail("split-pair face vertex violates its constraints");

  // Support values on coordinate, transition and anchor directions.
  auto unit = [&](int z) {
    RationalPoint u(static_cast<size_t>(n), Rational(0));
    u[static_cast<size_t>(z)] = 1;
    return u;
  };
  auto neg = [&](RationalPoint u) {
    for (auto& v : u) v = -v;
    return u;
  };
  auto minus = [&](RationalPoint u, const RationalPoint& v) {
    for (size_t i = 0; i < u.size(); ++i) u[i] -= v[i];
    return u;
  };
  RationalPoint mid(static_cast<size_t>(n), Rational(0));
  mid[static_cast<size_t>(x)] = Rational(1, 2);
  mid[static_cast<size_t>(y)] = Rational(1, 2);
  auto expect_support = [&](const RationalPoint& u, const Rational& hk,
                            const Rational& hl, const char* what) {
    if (support_value(K, u) != hk || support_value(L, u) != hl)
      sink.fail(std::string("support value of ") + what +
                " off the prediction");
  };
  const ElementSet bx = m.below_x(), ay = m.above_y(), bt = m.between();
  const ElementSet by = m.below_y_incomp_x(), ax = m.above_x_incomp_y();
  for (int z = 0; z < n; ++z) {
    if (z == x || z == y) continue;
    if (m.poset().is_maximal(z))
      expect_support(unit(z), 1, 1, "a maximal coordinate");
    if (m.poset().is_minimal(z))
      expect_support(neg(unit(z)), 0, 0, "a negated minimal coordinate");
    if (bt.contains(z) || by.contains(z))
      expect_support(minus(unit(z), mid), 0, Rational(1, 2),
                     "a lower anchor");
    if (bt.contains(z) || ax.contains(z))
      expect_support(minus(mid, unit(z)), 0, Rational(1, 2),
                     "an upper anchor");
    if (bx.contains(z))
      expect_support(minus(unit(z), mid), 0, Rational(-1, 2),
                     "a lower anchor below the pair");
    if (ay.contains(z))
      expect_support(minus(mid, unit(z)), 0, Rational(-1, 2),
                     "an upper anchor above the pair");
  }
  for (int z = 0; z < n; ++z)
    for (int zp = 0; zp < n; ++zp) {
      if (z == x || z == y || zp == x || zp == y) continue;
      if (!m.poset().less(z, zp)) continue;
      if (bx.contains(z) && ay.contains(zp)) continue;
      expect_support(minus(unit(z), unit(zp)), 0, 0, "a transition");
    }

  // Equality levels: dimension slack and the k-extreme catalog.
  for (int k = 2; k <= n - 2; ++k) {
    if (!c.equality_at(k)) continue;
    if (dk < n - k + 1)
      sink.fail("k=" + std::to_string(k) +
                ": equal-pair slice too small for an equality case");
    if (dl < k)
      sink.fail("k=" + std::to_string(k) +
                ": split-pair face too small for an equality case");

    std::vector<std::pair<std::string, RationalPoint>> catalog;
    for (int z = 0; z < n; ++z) {
      if (z == x || z == y) continue;
      if (m.poset().is_maximal(z))
        catalog.emplace_back("+e" + std::to_string(z), unit(z));
      if (m.poset().is_minimal(z))
        catalog.emplace_back("-e" + std::to_string(z), neg(unit(z)));
    }
    for (const auto& [z, zp] : m.poset().cover_relations()) {
      if (z == x || z == y || zp == x || zp == y) continue;
      const bool a = (bx.contains(z) && bx.contains(zp)) ||
                     (ay.contains(z) && ay.contains(zp));
      const bool b = (ax.contains(z) && ax.contains(zp)) ||
                     (by.contains(z) && by.contains(zp));
      const bool cc = bt.contains(z) && bt.contains(zp);
      const ElementSet ii = m.incomp_both();
      const bool d =
          (ax.contains(z) &&
           m.poset().strictly_above(z).subset_of(ay)) ||
          (by.contains(zp) && m.poset().strictly_below(zp).subset_of(bx));
      const bool e =
          (ii.contains(z) && m.poset().strictly_above(z).subset_of(ay)) ||
          (ii.contains(zp) && m.poset().strictly_below(zp).subset_of(bx));
      const bool f = (ii.contains(z) && !m.poset().less(y, zp)) ||
                     (ii.contains(zp) && !m.poset().less(z, x));
      const bool g =
          bt.contains(z) && ax.contains(zp) &&
          (m.poset().open_interval(x, zp) | bt).size() <= k - 1;
      const bool h =
          by.contains(z) && bt.contains(zp) &&
          (m.poset().open_interval(z, y) | bt).size() <= k - 1;
      const bool i =
          by.contains(z) && ax.contains(zp) &&
          (m.poset().open_interval(z, y) | m.poset().open_interval(x, zp) |
           bt).size() <= k - 2;
      if (a || b || cc || d || e || f || g || h || i)
        catalog.emplace_back(
            "e" + std::to_string(z) + "-e" + std::to_string(zp),
            minus(unit(z), unit(zp)));
    }
    for (int z = 0; z < n; ++z) {
      if (z == x || z == y) continue;
      if ((bt.contains(z) || by.contains(z)) && m.poset().covers(z, y) &&
          m.poset().strictly_above(z).size() + bx.size() <= n - k)
        catalog.emplace_back("anchor-lo e" + std::to_string(z),
                             minus(unit(z), mid));
      if ((bt.contains(z) || ax.contains(z)) && m.poset().covers(x, z) &&
          m.poset().strictly_below(z).size() + ay.size() <= n - k)
        catalog.emplace_back("anchor-hi e" + std::to_string(z),
                             minus(mid, unit(z)));
      if (m.poset().covers(z, x) &&
          m.poset().open_interval(z, y).with(x).size() <= k)
        catalog.emplace_back("anchor-below e" + std::to_string(z),
                             minus(unit(z), mid));
      if (m.poset().covers(y, z) &&
          m.poset().open_interval(x, z).with(y).size() <= k)
        catalog.emplace_back("anchor-above e" + std::to_string(z),
                             minus(mid, unit(z)));
    }
    for (const auto& [name, u] : catalog) {
      if (!is_k_extreme(m, k, u))
        sink.fail("k=" + std::to_string(k) + ": cataloged direction " + name +
                  " is not k-extreme");
    }
  }
}

// A harvested witness row pins coordinate z to value val: the particular
// solution takes that value and no homogeneous direction moves it.
bool pinned(const WitnessSystem& ws, int z, const Rational& val) {
  if (!ws.solution.feasible) return false;
  if (ws.solution.particular[static_cast<size_t>(z)] != val) return false;
  for (const auto& b : ws.solution.null_basis)
    if (b[static_cast<size_t>(z)] != 0) return false;
  return true;
}

void check_witness(const PairContext& c, CheckSink& sink) {
  const MarkedPoset& m = c.m;
  const int n = c.n();
  for (int k = 2; k <= n - 2; ++k) {
    if (c.gap(k) == 0) continue;
    const bool fl = c.flat_at(k);
    const bool db = c.doubling_at(k);
    if (fl || db) {
      const Rational a = fl ? Rational(1) : Rational(1, 2);
      const WitnessSystem ws = solve_witness(m, k, a);
      if (!ws.solution.feasible) {
        sink.fail("k=" + std::to_string(k) +
                  ": witness system infeasible in an equality case");
        continue;
      }
      if (db) {
        if (!check_witness_rules(ws))
          sink.fail("k=" + std::to_string(k) +
                    ": witness rules fail in a doubling case");
        if (!check_witness_rules(ws, Rational(1, 4)))
          sink.fail("k=" + std::to_string(k) +
                    ": witness rules with midpoint 1/4 fail in a doubling "
                    "case");
        const WitnessSystem ws1 = solve_witness(m, k, Rational(1));
        if (ws1.solution.feasible)
          sink.fail("k=" + std::to_string(k) +
                    ": flat-ratio witness system feasible in a doubling "
                    "case");
      }
      // Harvested constraints pin the ends of the solved poset.
      const Poset& dp = ws.domain.poset();
      for (int z = 0; z < dp.size(); ++z) {
        if (z == ws.domain.x() || z == ws.domain.y()) continue;
        if (dp.is_maximal(z) && !pinned(ws, z, 1 - a))
          sink.fail("k=" + std::to_string(k) + ": maximal element " +
                    std::to_string(z) + " not pinned to 1-a");
        if (dp.is_minimal(z) && !pinned(ws, z, Rational(0)))
          sink.fail("k=" + std::to_string(k) + ": minimal element " +
                    std::to_string(z) + " not pinned to 0");
      }
    } else if (n <= 4) {
      // Strict three-term inequality: neither ratio admits a witness.
      for (const Rational& a : {Rational(1), Rational(1, 2)}) {
        const WitnessSystem ws = solve_witness(m, k, a);
        if (ws.solution.feasible) {
          std::ostringstream os;
          os << "k=" << k << ": witness system with a="
             << to_fraction_string(a) << " feasible in a strict case";
          sink.fail(os.str());
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------

const std::vector<Check>& builtin_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> v;
    auto pair_check = [&](const char* name,
                          void (*fn)(const PairContext&, CheckSink&)) {
      Check c;
      c.name = name;
      c.on_pair = fn;
      v.push_back(std::move(c));
    };
    auto poset_check = [&](const char* name,
                           void (*fn)(const PosetContext&, CheckSink&)) {
      Check c;
      c.name = name;
      c.on_poset = fn;
      v.push_back(std::move(c));
    };
    pair_check("logconcave", check_logconcave);
    pair_check("vanish", check_vanish);
    pair_check("equality", check_equality);
    pair_check("flat", check_flat);
    pair_check("double", check_double);
    pair_check("mutex", check_mutex);
    pair_check("monotone", check_monotone);
    pair_check("dual", check_dual);
    pair_check("augment", check_augment);
    pair_check("partition", check_partition);
    poset_check("count", check_count);
    pair_check("shape", check_shape);
    pair_check("bijection", check_bijection);
    {
      Check c;
      c.name = "extend";
      c.on_poset = check_extend_poset;
      c.on_pair = check_extend_pair;
      v.push_back(std::move(c));
    }
    pair_check("geometry", check_geometry);
    pair_check("witness", check_witness);
    return v;
  }();
  return checks;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>&
suites() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>>
      s = {
          {"main-theorems",
           {"logconcave", "vanish", "equality", "flat", "double", "mutex"}},
          {"structure",
           {"monotone", "dual", "augment", "partition", "count", "shape",
            "bijection", "extend"}},
          {"geometry", {"geometry"}},
          {"witness", {"witness"}},
          {"all", {}},  // filled below
      };
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public generation API.
// ---------------------------------------------------------------------------

void generate_posets(int n, const std::function<bool(const Poset&)>& fn) {
  check_gen_size(n);
  GenState st;
  extend_all(st, n, [&](const GenState& s) { return fn(to_poset(s)); });
}

std::uint64_t count_labeled_posets(int n) {
  std::uint64_t count = 0;
  generate_posets(n, [&](const Poset&) {
    ++count;
    return true;
  });
  return count;
}

bool is_canonical_representative(const Poset& p) {
  const int n = p.size();
  if (n > kMaxGenSize)
    throw BadParameters("canonical-form test supports sizes up to " +
                        std::to_string(kMaxGenSize));
  std::array<std::uint64_t, kMaxGenSize> rows{};
  for (int i = 0; i < n; ++i)
    rows[static_cast<size_t>(i)] = p.strictly_above(i).bits();
  std::array<int, kMaxGenSize> perm{};
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  std::array<int, kMaxGenSize> inv{};
  do {
    for (int z = 0; z < n; ++z)
      inv[static_cast<size_t>(perm[static_cast<size_t>(z)])] = z;
    int cmp = 0;
    for (int a = 0; a < n && cmp == 0; ++a) {
      std::uint64_t mapped = 0;
      for (std::uint64_t t = rows[static_cast<size_t>(inv[
               static_cast<size_t>(a)])];
           t;) {
        int z = std::countr_zero(t);
        t &= t - 1;
        mapped |= std::uint64_t{1} << perm[static_cast<size_t>(z)];
      }
      const std::uint64_t base = rows[static_cast<size_t>(a)];
      if (mapped != base) cmp = mapped < base ? -1 : 1;
    }
    if (cmp < 0) return false;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return true;
}

std::pair<int, int> first_marked_pair(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (x != y && !p.less(y, x)) return {x, y};
  throw BadParameters("poset has no valid marked pair");
}

// ---------------------------------------------------------------------------
// Check resolution.
// ---------------------------------------------------------------------------

std::vector<std::string> builtin_check_names() {
  std::vector<std::string> names;
  for (const auto& c : builtin_checks()) names.push_back(c.name);
  return names;
}

std::vector<Check> resolve_checks(const std::vector<std::string>& names) {
  const auto& registry = builtin_checks();
  std::vector<bool> active(registry.size(), false);
  auto activate = [&](const std::string& name) {
    for (size_t i = 0; i < registry.size(); ++i)
      if (registry[i].name == name) {
        active[i] = true;
        return true;
      }
    return false;
  };
  for (const std::string& name : names) {
    if (name == "all") {
      std::fill(active.begin(), active.end(), true);
      continue;
    }
    bool found = activate(name);
    if (!found)
      for (const auto& [suite, members] : suites())
        if (suite == name && suite != "all") {
          for (const auto& member : members) activate(member);
          found = true;
          break;
        }
    if (!found) throw BadParameters("unknown check or suite: " + name);
  }
  std::vector<Check> out;
  for (size_t i = 0; i < registry.size(); ++i)
    if (active[i]) out.push_back(registry[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Sweep driver.
// ---------------------------------------------------------------------------

namespace {

struct LocalCounterexample {
  int check_idx;
  int n;
  std::uint64_t ordinal;
  std::string note;
  std::string poset_text;
};

struct WorkerState {
  std::uint64_t visited = 0;
  std::uint64_t skipped = 0;
  std::uint64_t pairs = 0;
  std::vector<std::uint64_t> units;
  std::vector<std::uint64_t> failures;
  std::vector<int> kept;  // counterexamples stored per check
  std::vector<LocalCounterexample> ces;
};

class RecordingSink final : public CheckSink {
 public:
  RecordingSink(WorkerState& ws, int check_idx, int n, std::uint64_t ordinal,
                int cap, const std::function<std::string()>& serialize)
      : ws_(ws),
        check_idx_(check_idx),
        n_(n),
        ordinal_(ordinal),
        cap_(cap),
        serialize_(serialize) {}

  void fail(const std::string& note) override {
    ++ws_.failures[static_cast<size_t>(check_idx_)];
    if (ws_.kept[static_cast<size_t>(check_idx_)] < cap_) {
      ++ws_.kept[static_cast<size_t>(check_idx_)];
      ws_.ces.push_back(
          {check_idx_, n_, ordinal_, note, serialize_()});
    }
  }

 private:
  WorkerState& ws_;
  int check_idx_;
  int n_;
  std::uint64_t ordinal_;
  int cap_;
  const std::function<std::string()>& serialize_;
};

struct RunPlan {
  std::vector<Check> checks;
  bool need_dual = false;
  std::uint64_t ceiling = 0;
  bool dedup = false;
  int max_ces = 0;
};

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void process_poset(const Poset& p, std::uint64_t ordinal, const RunPlan& plan,
                   bool skip_possible, WorkerState& out) {
  const int n = p.size();
  if (plan.dedup && !is_canonical_representative(p)) return;
  if (skip_possible && count_extensions(p) > BigInt(plan.ceiling)) {
    ++out.skipped;
    return;
  }
  const std::vector<LinearExtension> exts = all_extensions(p);
  ++out.visited;

  std::optional<std::string> cached_text;
  for (size_t ci = 0; ci < plan.checks.size(); ++ci) {
    if (!plan.checks[ci].on_poset) continue;
    std::function<std::string()> ser = [&]() -> std::string {
      if (!cached_text) {
        auto [px, py] = first_marked_pair(p);
        cached_text = render_marked_poset(MarkedPoset(p, px, py));
      }
      return *cached_text;
    };
    RecordingSink sink(out, static_cast<int>(ci), n, ordinal, plan.max_ces,
                       ser);
    ++out.units[ci];
    PosetContext ctx{p, exts};
    plan.checks[ci].on_poset(ctx, sink);
  }

  std::vector<LinearExtension> dual_exts;
  if (plan.need_dual) dual_exts = all_extensions(p.dual());

  std::vector<std::uint64_t> gaps(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || p.less(y, x)) continue;
      ++out.pairs;
      const MarkedPoset m(p, x, y);
      std::fill(gaps.begin(), gaps.end(), 0);
      for (const auto& f : exts) {
        const int d = f.position(y) - f.position(x);
        ++gaps[static_cast<size_t>(d > 0 ? d : 0)];
      }
      PairContext ctx{m, exts, gaps,
                      plan.need_dual ? &dual_exts : nullptr};
      std::optional<std::string> pair_text;
      for (size_t ci = 0; ci < plan.checks.size(); ++ci) {
        if (!plan.checks[ci].on_pair) continue;
        std::function<std::string()> ser = [&]() -> std::string {
          if (!pair_text) pair_text = render_marked_poset(m);
          return *pair_text;
        };
        RecordingSink sink(out, static_cast<int>(ci), n, ordinal,
                           plan.max_ces, ser);
        ++out.units[ci];
        plan.checks[ci].on_pair(ctx, sink);
      }
    }
}

SweepResult finish(const SweepConfig& cfg, const RunPlan& plan,
                   std::vector<WorkerState>& workers) {
  SweepResult result;
  result.config = cfg;
  result.tallies.resize(plan.checks.size());
  for (size_t i = 0; i < plan.checks.size(); ++i)
    result.tallies[i].name = plan.checks[i].name;
  std::vector<LocalCounterexample> ces;
  for (const auto& w : workers) {
    result.posets_visited += w.visited;
    result.posets_skipped += w.skipped;
    result.marked_pairs_visited += w.pairs;
    for (size_t i = 0; i < plan.checks.size(); ++i) {
      result.tallies[i].units += w.units[i];
      result.tallies[i].failures += w.failures[i];
    }
    ces.insert(ces.end(), w.ces.begin(), w.ces.end());
  }
  std::sort(ces.begin(), ces.end(), [](const LocalCounterexample& a,
                                       const LocalCounterexample& b) {
    return std::tie(a.check_idx, a.n, a.ordinal, a.note) <
           std::tie(b.check_idx, b.n, b.ordinal, b.note);
  });
  std::vector<int> kept(plan.checks.size(), 0);
  for (auto& ce : ces) {
    if (kept[static_cast<size_t>(ce.check_idx)] >= plan.max_ces) continue;
    ++kept[static_cast<size_t>(ce.check_idx)];
    result.counterexamples.push_back(
        {plan.checks[static_cast<size_t>(ce.check_idx)].name,
         std::move(ce.note), ce.ordinal, ce.n, std::move(ce.poset_text)});
  }
  return result;
}

}  // namespace

std::uint64_t SweepResult::total_failures() const {
  std::uint64_t total = 0;
  for (const auto& t : tallies) total += t.failures;
  return total;
}

SweepResult sweep(const SweepConfig& cfg,
                  const std::vector<Check>& extra_checks) {
  if (cfg.n_max < 2 || cfg.n_max > kMaxGenSize)
    throw BadParameters("n_max must lie in [2, " +
                        std::to_string(kMaxGenSize) + "]");
  if (cfg.parallelism < 1 || cfg.parallelism > 64)
    throw BadParameters("parallelism must lie in [1, 64]");
  if (cfg.extension_ceiling < 1 ||
      cfg.extension_ceiling > (std::uint64_t{1} << 31))
    throw BadParameters("extension ceiling must lie in [1, 2^31]");
  if (cfg.max_counterexamples < 0)
    throw BadParameters("max_counterexamples must be nonnegative");

  RunPlan plan;
  plan.checks = resolve_checks(cfg.checks);
  for (const auto& extra : extra_checks) {
    for (const auto& c : plan.checks)
      if (c.name == extra.name)
        throw BadParameters("duplicate check name: " + extra.name);
    plan.checks.push_back(extra);
  }
  for (const auto& c : plan.checks)
    if (c.name == "dual") plan.need_dual = true;
  plan.ceiling = cfg.extension_ceiling;
  plan.dedup = cfg.dedup;
  plan.max_ces = cfg.max_counterexamples;

  std::vector<WorkerState> workers;
  for (int n = 2; n <= cfg.n_max; ++n) {
    // Phase one: all posets on min(n, 4) elements, in generation order.
    const int base_size = std::min(n, 4);
    std::vector<GenState> bases;
    {
      GenState st;
      extend_all(st, base_size, [&](const GenState& s) {
        bases.push_back(s);
        return true;
      });
    }
    const bool skip_possible = factorial(n) > BigInt(plan.ceiling);
    const int jobs =
        std::min<int>(cfg.parallelism, static_cast<int>(bases.size()));
    std::vector<WorkerState> outs(static_cast<size_t>(jobs));
    for (auto& w : outs) {
      w.units.assign(plan.checks.size(), 0);
      w.failures.assign(plan.checks.size(), 0);
      w.kept.assign(plan.checks.size(), 0);
    }
    std::atomic<size_t> next{0};
    auto run_worker = [&](WorkerState& out) {
      for (;;) {
        const size_t idx = next.fetch_add(1);
        if (idx >= bases.size()) break;
        GenState st = bases[idx];
        std::uint64_t leaf = 0;
        extend_all(st, n, [&](const GenState& s) {
          const std::uint64_t ordinal = (static_cast<std::uint64_t>(idx)
                                         << 32) |
                                        leaf++;
          process_poset(to_poset(s), ordinal, plan, skip_possible, out);
          return true;
        });
      }
    };
    if (jobs <= 1) {
      run_worker(outs[0]);
    } else {
      std::vector<std::thread> threads;
      std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
      for (int j = 0; j < jobs; ++j)
        threads.emplace_back([&, j] {
          try {
            run_worker(outs[static_cast<size_t>(j)]);
          } catch (...) {
            errors[static_cast<size_t>(j)] = std::current_exception();
          }
        });
      for (auto& t : threads) t.join();
      for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (auto& w : outs) workers.push_back(std::move(w));
  }
  return finish(cfg, plan, workers);
}

SweepResult verify_pair(const MarkedPoset& m,
                        const std::vector<std::string>& checks) {
  SweepConfig cfg;
  cfg.checks = checks;
  cfg.n_max = std::max(2, std::min(m.n(), kMaxGenSize));

  RunPlan plan;
  plan.checks = resolve_checks(checks);
  for (const auto& c : plan.checks)
    if (c.name == "dual") plan.need_dual = true;
  plan.ceiling = cfg.extension_ceiling;
  plan.dedup = false;
  plan.max_ces = cfg.max_counterexamples;

  const Poset& p = m.poset();
  const std::vector<LinearExtension> exts = all_extensions(p);
  std::vector<LinearExtension> dual_exts;
  if (plan.need_dual) dual_exts = all_extensions(p.dual());
  std::vector<std::uint64_t> gaps(static_cast<size_t>(m.n()), 0);
  for (const auto& f : exts) {
    const int d = f.position(m.y()) - f.position(m.x());
    ++gaps[static_cast<size_t>(d > 0 ? d : 0)];
  }

  std::vector<WorkerState> workers(1);
  WorkerState& out = workers[0];
  out.units.assign(plan.checks.size(), 0);
  out.failures.assign(plan.checks.size(), 0);
  out.kept.assign(plan.checks.size(), 0);
  out.visited = 1;
  out.pairs = 1;

  std::optional<std::string> text;
  for (size_t ci = 0; ci < plan.checks.size(); ++ci) {
    std::function<std::string()> ser = [&]() -> std::string {
      if (!text) text = render_marked_poset(m);
      return *text;
    };
    RecordingSink sink(out, static_cast<int>(ci), m.n(), 0, plan.max_ces,
                       ser);
    if (plan.checks[ci].on_poset) {
      ++out.units[ci];
      PosetContext ctx{p, exts};
      plan.checks[ci].on_poset(ctx, sink);
    }
    if (plan.checks[ci].on_pair) {
      ++out.units[ci];
      PairContext ctx{m, exts, gaps,
                      plan.need_dual ? &dual_exts : nullptr};
      plan.checks[ci].on_pair(ctx, sink);
    }
  }
  return finish(cfg, plan, workers);
}

}  // namespace ksgap
