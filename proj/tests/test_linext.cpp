#include "ksgap/linext.hpp"

#include "doctest.h"
#include "ksgap/errors.hpp"
#include "ksgap/generators.hpp"
#include "ksgap/harness.hpp"
#include "ksgap/poset.hpp"
#include "oracle.hpp"

#include <cstdint>
#include <vector>

using namespace ksgap;

namespace {

std::vector<std::vector<int>> order_words(const std::vector<LinearExtension>& v) {
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(f.order());
  return out;
}

}  // namespace

TEST_CASE("linear extension accessors") {
  const Poset p = Poset::from_cover_relations(3, {{0, 1}});
  const LinearExtension f(p, {2, 0, 1});
  CHECK(f.size() == 3);
  CHECK(f.at(0) == 2);
  CHECK(f.at(2) == 1);
  CHECK(f.position(2) == 0);
  CHECK(f.rank(2) == 1);
  CHECK(f.rank(1) == 3);
  CHECK(f.gap(0, 1) == 1);
  CHECK(f.gap(1, 0) == -1);
  CHECK(f == LinearExtension(p, {2, 0, 1}));
  CHECK_FALSE(f == LinearExtension(p, {0, 1, 2}));
}

TEST_CASE("linear extension validation") {
  const Poset p = Poset::from_cover_relations(3, {{0, 1}});
  CHECK_THROWS_AS(LinearExtension(p, {1, 0, 2}), NotAnExtension);
  CHECK_THROWS_AS(LinearExtension(p, {0, 1}), NotAnExtension);  // too short
  CHECK_THROWS_AS(LinearExtension(p, {0, 1, 1}), NotAnExtension);  // repeat
  CHECK_THROWS_AS(LinearExtension(p, {0, 1, 3}), IndexOutOfRange);
  CHECK_THROWS_AS(LinearExtension(p, {0, 1, -1}), IndexOutOfRange);
}

TEST_CASE("enumeration is lexicographic and matches the oracle") {
  SUBCASE("three-element V") {
    const Poset p = Poset::from_cover_relations(3, {{0, 1}, {0, 2}});
    const auto got = order_words(all_extensions(p));
    CHECK(got == std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 1}});
  }
  SUBCASE("antichain") {
    const Poset p = Poset::from_cover_relations(3, {});
    const auto got = order_words(all_extensions(p));
    const auto want = oracle::all_orders(oracle::close(3, {}));
    CHECK(got == want);
  }
  SUBCASE("two-tails") {
    const MarkedPoset m = two_tails_example();
    const auto got = order_words(all_extensions(m.poset()));
    const auto want = oracle::all_orders(
        oracle::close(6, {{2, 3}, {3, 1}, {0, 4}, {4, 5}}));
    CHECK(got.size() == 20);
    CHECK(got == want);
  }
}

TEST_CASE("enumeration can stop early") {
  const Poset p = Poset::from_cover_relations(4, {});
  int seen = 0;
  enumerate_extensions(p, [&](const LinearExtension&) {
    return ++seen < 5;
  });
  CHECK(seen == 5);
}

TEST_CASE("all_extensions enforces its limit") {
  const Poset p = Poset::from_cover_relations(4, {});
  CHECK(all_extensions(p).size() == 24);
  CHECK_THROWS_AS(all_extensions(p, 10), BadParameters);
}

TEST_CASE("count_extensions agrees with enumeration on every small poset") {
  for (int n = 1; n <= 4; ++n) {
    generate_posets(n, [&](const Poset& p) {
      CHECK(count_extensions(p) == BigInt(all_extensions(p).size()));
      return true;
    });
  }
  const Poset chain = Poset::from_cover_relations(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(count_extensions(chain) == 1);
  const Poset anti6 = Poset::from_cover_relations(6, {});
  CHECK(count_extensions(anti6) == 720);
}

TEST_CASE("gap sequence accessors and support") {
  const GapSequence g(4, {BigInt(0), BigInt(2), BigInt(1)});
  CHECK(g.n() == 4);
  CHECK(g.at(2) == 2);
  CHECK(g.total() == 3);
  CHECK(g.min_support() == 2);
  CHECK(g.max_support() == 3);
  CHECK_THROWS_AS(g.at(0), IndexOutOfRange);
  CHECK_THROWS_AS(g.at(4), IndexOutOfRange);
  CHECK_THROWS_AS(GapSequence(4, {BigInt(1)}), BadParameters);

  const GapSequence zero(3, {BigInt(0), BigInt(0)});
  CHECK(zero.min_support() == 0);
  CHECK(zero.max_support() == 0);
}

TEST_CASE("gap sequences match the permutation oracle") {
  SUBCASE("two-tails") {
    const GapSequence g = gap_sequence(two_tails_example());
    const auto want = oracle::gap_counts(
        oracle::close(6, {{2, 3}, {3, 1}, {0, 4}, {4, 5}}), 0, 1);
    for (int k = 1; k <= 5; ++k)
      CHECK(g.at(k) == BigInt(want[static_cast<size_t>(k)]));
    CHECK(g.at(1) == 1);
    CHECK(g.at(2) == 2);
    CHECK(g.at(3) == 4);
    CHECK(g.at(4) == 6);
    CHECK(g.at(5) == 6);
  }
  SUBCASE("every marked pair of every poset with up to 4 elements") {
    for (int n = 2; n <= 4; ++n) {
      generate_posets(n, [&](const Poset& p) {
        oracle::Relation r;
        r.n = n;
        r.lt.assign(static_cast<size_t>(n),
                    std::vector<bool>(static_cast<size_t>(n), false));
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (p.less(a, b)) r.lt[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            if (x == y || p.less(y, x)) continue;
            const GapSequence g = gap_sequence(MarkedPoset(p, x, y));
            const auto want = oracle::gap_counts(r, x, y);
            for (int k = 1; k < n; ++k)
              CHECK(g.at(k) == BigInt(want[static_cast<size_t>(k)]));
          }
        return true;
      });
    }
  }
}

TEST_CASE("minimal_gap_extension achieves 1 + |between|") {
  SUBCASE("two-tails") {
    const MarkedPoset m = two_tails_example();
    const LinearExtension f = minimal_gap_extension(m);
    CHECK(f.gap(m.x(), m.y()) == 1);
  }
  SUBCASE("pair with two elements between") {
    const Poset p =
        Poset::from_cover_relations(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {4, 1}});
    const MarkedPoset m(p, 0, 1);
    const LinearExtension f = minimal_gap_extension(m);
    CHECK(f.gap(0, 1) == 1 + m.between().size());
    // Exactly the between elements separate the pair.
    for (int i = f.position(0) + 1; i < f.position(1); ++i)
      CHECK(m.between().contains(f.at(i)));
  }
}

TEST_CASE("boundary_extension lists S first and T last") {
  const Poset p = Poset::from_cover_relations(4, {{0, 1}, {2, 3}});
  const ElementSet s = ElementSet::single(0) | ElementSet::single(2);
  const ElementSet t = ElementSet::single(3);
  const LinearExtension f = boundary_extension(p, s, t);
  CHECK(f.order() == std::vector<int>{0, 2, 1, 3});
  CHECK_THROWS_AS(boundary_extension(p, ElementSet::single(1), t),
                  NotLowerSet);
  CHECK_THROWS_AS(boundary_extension(p, s, ElementSet::single(2)),
                  NotUpperSet);
  // {1, 2, 3} is upward closed but meets s at 2.
  const ElementSet overlap =
      ElementSet::single(1) | ElementSet::single(2) | ElementSet::single(3);
  CHECK_THROWS_AS(boundary_extension(p, s, overlap), Overlap);
}

TEST_CASE("adjacent_pair_extension pushes a cover pair together") {
  const MarkedPoset m = two_tails_example();
  const Poset& p = m.poset();
  // z1 ... z2 with x in between; z2 covers z1.
  const LinearExtension f(p, {2, 0, 3, 1, 4, 5});
  const LinearExtension g = adjacent_pair_extension(p, f, 2, 3);
  CHECK(g.position(3) == g.position(2) + 1);
  // Elements outside the original span keep their positions.
  CHECK(g.position(1) == 3);
  CHECK(g.position(4) == 4);
  CHECK(g.position(5) == 5);
  CHECK_THROWS_AS(adjacent_pair_extension(p, f, 2, 1), NotCoverPair);
  CHECK_THROWS_AS(adjacent_pair_extension(p, f, 0, 1), NotCoverPair);
  const Poset anti = Poset::from_cover_relations(6, {});
  const LinearExtension h(anti, {1, 0, 2, 3, 4, 5});
  CHECK_THROWS_AS(adjacent_pair_extension(p, h, 2, 3), NotAnExtension);
}

TEST_CASE("doubling_reconstruct assembles gap extensions from side data") {
  const MarkedPoset m = two_tails_example();
  SUBCASE("empty word gives the unique gap-1 extension") {
    const LinearExtension f = doubling_reconstruct(m, {2, 3}, {4, 5}, {});
    CHECK(f.order() == std::vector<int>{2, 3, 0, 1, 4, 5});
  }
  SUBCASE("a 0 moves the lower tail between the pair") {
    const LinearExtension f = doubling_reconstruct(m, {2, 3}, {4, 5}, {0});
    CHECK(f.order() == std::vector<int>{2, 0, 3, 1, 4, 5});
    CHECK(f.gap(0, 1) == 2);
  }
  SUBCASE("a 1 moves the upper head between the pair") {
    const LinearExtension f = doubling_reconstruct(m, {2, 3}, {4, 5}, {1});
    CHECK(f.order() == std::vector<int>{2, 3, 0, 4, 1, 5});
    CHECK(f.gap(0, 1) == 2);
  }
  SUBCASE("distinct words give distinct extensions at gap 3") {
    const LinearExtension f00 = doubling_reconstruct(m, {2, 3}, {4, 5}, {0, 0});
    const LinearExtension f01 = doubling_reconstruct(m, {2, 3}, {4, 5}, {0, 1});
    const LinearExtension f10 = doubling_reconstruct(m, {2, 3}, {4, 5}, {1, 0});
    const LinearExtension f11 = doubling_reconstruct(m, {2, 3}, {4, 5}, {1, 1});
    CHECK(f00.gap(0, 1) == 3);
    CHECK_FALSE(f00 == f01);
    CHECK_FALSE(f01 == f10);
    CHECK_FALSE(f10 == f11);
    CHECK_FALSE(f00 == f11);
  }
  SUBCASE("side orders must extend the induced side posets") {
    CHECK_THROWS_AS(doubling_reconstruct(m, {3, 2}, {4, 5}, {}),
                    NotAnExtension);
    CHECK_THROWS_AS(doubling_reconstruct(m, {2, 3}, {5, 4}, {}),
                    NotAnExtension);
    CHECK_THROWS_AS(doubling_reconstruct(m, {2}, {4, 5}, {}), NotAnExtension);
  }
  SUBCASE("posets with middle regions are rejected") {
    const Poset chain3 = Poset::from_cover_relations(3, {{0, 2}, {2, 1}});
    CHECK_THROWS_AS(doubling_reconstruct(MarkedPoset(chain3, 0, 1), {}, {}, {}),
                    PartitionViolated);
    const Poset anti4 = Poset::from_cover_relations(4, {});
    CHECK_THROWS_AS(
        doubling_reconstruct(MarkedPoset(anti4, 0, 1), {2}, {3}, {}),
        PartitionViolated);
  }
  SUBCASE("an assembled word that breaks the order is rejected") {
    // a < x and y < b: moving either side between the pair violates p.
    const Poset p = Poset::from_cover_relations(4, {{2, 0}, {1, 3}});
    const MarkedPoset q(p, 0, 1);
    CHECK(doubling_reconstruct(q, {2}, {3}, {}).order() ==
          std::vector<int>{2, 0, 1, 3});
    CHECK_THROWS_AS(doubling_reconstruct(q, {2}, {3}, {0}), NotAnExtension);
    CHECK_THROWS_AS(doubling_reconstruct(q, {2}, {3}, {1}), NotAnExtension);
  }
}
