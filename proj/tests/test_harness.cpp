#include "ksgap/harness.hpp"

#include "doctest.h"
#include "ksgap/errors.hpp"
#include "ksgap/generators.hpp"
#include "ksgap/poset.hpp"
#include "ksgap/poset_io.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

using namespace ksgap;

TEST_CASE("labeled poset counts") {
  CHECK(count_labeled_posets(0) == 1);
  CHECK(count_labeled_posets(1) == 1);
  CHECK(count_labeled_posets(2) == 3);
  CHECK(count_labeled_posets(3) == 19);
  CHECK(count_labeled_posets(4) == 219);
  CHECK(count_labeled_posets(5) == 4231);
  CHECK_THROWS_AS(count_labeled_posets(9), BadParameters);
  CHECK_THROWS_AS(count_labeled_posets(-1), BadParameters);
}

TEST_CASE("generation yields distinct valid posets and can stop early") {
  std::set<std::vector<std::pair<int, int>>> seen;
  generate_posets(3, [&](const Poset& p) {
    CHECK(p.size() == 3);
    CHECK(seen.insert(p.cover_relations()).second);  // no duplicates
    return true;
  });
  CHECK(seen.size() == 19);
  int visited = 0;
  generate_posets(3, [&](const Poset&) { return ++visited < 7; });
  CHECK(visited == 7);
}

TEST_CASE("generation order is stable") {
  std::vector<std::vector<std::pair<int, int>>> first, second;
  generate_posets(3, [&](const Poset& p) {
    first.push_back(p.cover_relations());
    return true;
  });
  generate_posets(3, [&](const Poset& p) {
    second.push_back(p.cover_relations());
    return true;
  });
  CHECK(first == second);
}

TEST_CASE("canonical representatives count isomorphism classes") {
  const std::vector<std::uint64_t> unlabeled = {1, 2, 5, 16, 63};
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t reps = 0;
    generate_posets(n, [&](const Poset& p) {
      if (is_canonical_representative(p)) ++reps;
      return true;
    });
    CHECK(reps == unlabeled[static_cast<size_t>(n - 1)]);
  }
}

TEST_CASE("first_marked_pair picks the lexicographically first valid mark") {
  CHECK(first_marked_pair(Poset::from_cover_relations(2, {})) ==
        std::pair<int, int>{0, 1});
  CHECK(first_marked_pair(Poset::from_cover_relations(2, {{0, 1}})) ==
        std::pair<int, int>{0, 1});
  // With 1 < 0 the pair (0, 1) is invalid, so (1, 0) comes first.
  CHECK(first_marked_pair(Poset::from_cover_relations(2, {{1, 0}})) ==
        std::pair<int, int>{1, 0});
}

TEST_CASE("check resolution expands suites in registry order") {
  const auto all_names = builtin_check_names();
  CHECK(all_names.size() == 16);
  const auto all_checks = resolve_checks({"all"});
  REQUIRE(all_checks.size() == all_names.size());
  for (size_t i = 0; i < all_checks.size(); ++i)
    CHECK(all_checks[i].name == all_names[i]);

  const auto main = resolve_checks({"main-theorems"});
  std::vector<std::string> got;
  for (const auto& c : main) got.push_back(c.name);
  CHECK(got == std::vector<std::string>{"logconcave", "vanish", "equality",
                                        "flat", "double", "mutex"});

  // Duplicates collapse; explicit names mix with suites.
  CHECK(resolve_checks({"flat", "main-theorems", "flat"}).size() == 6);
  CHECK(resolve_checks({"geometry"}).size() == 1);
  CHECK(resolve_checks({}).empty());
  CHECK_THROWS_AS(resolve_checks({"no-such-check"}), BadParameters);
}

TEST_CASE("sweep visits every labeled poset up to the size bound") {
  SweepConfig cfg;
  cfg.n_max = 3;
  cfg.checks = {"main-theorems"};
  const SweepResult r = sweep(cfg);
  CHECK(r.posets_visited == 3 + 19);
  CHECK(r.posets_skipped == 0);
  CHECK(r.ok());
  CHECK(r.total_failures() == 0);
  REQUIRE(r.tallies.size() == 6);
  for (const auto& t : r.tallies) {
    CHECK(t.failures == 0);
    CHECK(t.units == r.marked_pairs_visited);
  }
  // Ordered marked pairs (x, y), x != y, y not below x: chains allow one
  // direction, antichains both.
  CHECK(r.marked_pairs_visited > 0);
}

TEST_CASE("the extension ceiling skips expensive posets") {
  SweepConfig cfg;
  cfg.n_max = 2;
  cfg.checks = {"logconcave"};
  cfg.extension_ceiling = 1;
  const SweepResult r = sweep(cfg);
  // Of the three two-element posets, only the antichain has 2 > 1
  // extensions.
  CHECK(r.posets_visited == 2);
  CHECK(r.posets_skipped == 1);
}

TEST_CASE("dedup restricts the sweep to canonical representatives") {
  SweepConfig cfg;
  cfg.n_max = 4;
  cfg.dedup = true;
  cfg.checks = {"logconcave"};
  const SweepResult r = sweep(cfg);
  CHECK(r.posets_visited == 2 + 5 + 16);
}

TEST_CASE("failing checks are tallied and sampled as counterexamples") {
  Check broken;
  broken.name = "always-fails";
  broken.on_pair = [](const PairContext& ctx, CheckSink& sink) {
    if (ctx.n() == 3) sink.fail("pair note");
  };
  Check poset_broken;
  poset_broken.name = "poset-fails";
  poset_broken.on_poset = [](const PosetContext& ctx, CheckSink& sink) {
    if (ctx.p.size() == 2) sink.fail("poset note");
  };
  SweepConfig cfg;
  cfg.n_max = 3;
  cfg.checks = {};
  cfg.max_counterexamples = 4;
  const SweepResult r = sweep(cfg, {broken, poset_broken});
  CHECK_FALSE(r.ok());
  REQUIRE(r.tallies.size() == 2);
  CHECK(r.tallies[0].name == "always-fails");
  CHECK(r.tallies[0].failures > 4);  // every marked pair at size 3
  CHECK(r.tallies[1].failures == 3);  // every poset at size 2
  // Counterexamples are capped per check, ordered, and parseable.
  int from_pair = 0, from_poset = 0;
  for (const auto& ce : r.counterexamples) {
    if (ce.check == "always-fails") ++from_pair;
    if (ce.check == "poset-fails") ++from_poset;
    CHECK_NOTHROW(parse_marked_poset_text(ce.poset_text));
    CHECK(ce.n == (ce.check == "always-fails" ? 3 : 2));
  }
  CHECK(from_pair == 4);
  CHECK(from_poset == 3);
}

TEST_CASE("sweep results do not depend on the worker count") {
  SweepConfig cfg;
  cfg.n_max = 4;
  cfg.checks = {"main-theorems", "count", "shape"};
  const SweepResult serial = sweep(cfg);
  cfg.parallelism = 3;
  const SweepResult parallel = sweep(cfg);
  CHECK(serial.posets_visited == parallel.posets_visited);
  CHECK(serial.posets_skipped == parallel.posets_skipped);
  CHECK(serial.marked_pairs_visited == parallel.marked_pairs_visited);
  REQUIRE(serial.tallies.size() == parallel.tallies.size());
  for (size_t i = 0; i < serial.tallies.size(); ++i) {
    CHECK(serial.tallies[i].name == parallel.tallies[i].name);
    CHECK(serial.tallies[i].units == parallel.tallies[i].units);
    CHECK(serial.tallies[i].failures == parallel.tallies[i].failures);
  }
  CHECK(serial.counterexamples.size() == parallel.counterexamples.size());
}

TEST_CASE("sweep validates its configuration") {
  SweepConfig cfg;
  cfg.n_max = 1;
  CHECK_THROWS_AS(sweep(cfg), BadParameters);
  cfg.n_max = 9;
  CHECK_THROWS_AS(sweep(cfg), BadParameters);
  cfg.n_max = 3;
  cfg.parallelism = 0;
  CHECK_THROWS_AS(sweep(cfg), BadParameters);
  cfg.parallelism = 1;
  cfg.extension_ceiling = 0;
  CHECK_THROWS_AS(sweep(cfg), BadParameters);
  cfg.extension_ceiling = std::uint64_t{1} << 32;
  CHECK_THROWS_AS(sweep(cfg), BadParameters);
  cfg.extension_ceiling = 1000;
  cfg.max_counterexamples = -1;
  CHECK_THROWS_AS(sweep(cfg), BadParameters);
  cfg.max_counterexamples = 10;
  cfg.checks = {"bogus"};
  CHECK_THROWS_AS(sweep(cfg), BadParameters);
  cfg.checks = {"flat"};
  Check dup;
  dup.name = "flat";
  dup.on_pair = [](const PairContext&, CheckSink&) {};
  CHECK_THROWS_AS(sweep(cfg, {dup}), BadParameters);
}

TEST_CASE("verify_pair runs the checks on a single marked poset") {
  const SweepResult r = verify_pair(two_tails_example(), {"all"});
  CHECK(r.ok());
  CHECK(r.posets_visited == 1);
  CHECK(r.marked_pairs_visited == 1);
  CHECK(r.tallies.size() == 16);
  for (const auto& t : r.tallies) {
    // One unit per hook: "extend" installs a poset and a pair hook.
    CHECK(t.units == (t.name == "extend" ? 2 : 1));
    CHECK(t.failures == 0);
  }

  const SweepResult f = verify_pair(chain_ladder_example(4, 3, 4, 2, 3),
                                    {"main-theorems", "witness"});
  CHECK(f.ok());
  CHECK(f.tallies.size() == 7);
}
