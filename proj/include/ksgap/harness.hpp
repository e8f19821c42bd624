#pragma once

#include "ksgap/linext.hpp"
#include "ksgap/poset.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ksgap {

// ---------------------------------------------------------------------------
// Exhaustive generation of labeled posets.
// ---------------------------------------------------------------------------

// Calls fn for every poset on {0, ..., n-1}, each exactly once, in a fixed
// order that depends only on n.  Elements are added in index order; element
// i is attached to an (already-down-closed, already-up-closed) pair of
// subsets of {0, ..., i-1}, which reproduces every labeled poset exactly
// once.  Returning false from fn stops the generation.  Requires
// 0 <= n <= 8 (the counts grow as 1, 1, 3, 19, 219, 4231, 130023, ...).
void generate_posets(int n, const std::function<bool(const Poset&)>& fn);

// The number of labeled posets on {0, ..., n-1}, by generation.
std::uint64_t count_labeled_posets(int n);

// True when no relabeling of p produces a strictly smaller relation table
// (rows compared as numbers, row by row), so p is the chosen representative
// of its isomorphism class.
bool is_canonical_representative(const Poset& p);

// The lexicographically first (x, y) with x != y and y not below x.  Every
// poset with at least two elements has one.
std::pair<int, int> first_marked_pair(const Poset& p);

// ---------------------------------------------------------------------------
// Checks: named invariants run over every generated poset / marked pair.
// ---------------------------------------------------------------------------

// Everything a poset-level check may look at.
struct PosetContext {
  const Poset& p;
  // All linear extensions, lexicographic.
  const std::vector<LinearExtension>& extensions;
};

// Everything a pair-level check may look at.  Gap counts are plain 64-bit:
// the sweep never visits a poset with more than 2^31 extensions, so
// products of two counts cannot overflow.
struct PairContext {
  const MarkedPoset& m;
  const std::vector<LinearExtension>& extensions;  // of the whole poset
  // gaps[k], k in [1, n-1]: extensions with rank(y) - rank(x) = k;
  // gaps[0]: extensions with y before x.
  const std::vector<std::uint64_t>& gaps;
  // Extensions of the dual poset; non-null only while the "dual" check is
  // active.
  const std::vector<LinearExtension>* dual_extensions = nullptr;

  int n() const { return m.n(); }
  std::uint64_t gap(int k) const { return gaps[static_cast<size_t>(k)]; }
  // The three-term comparison below is defined for k in [2, n-2] only.
  bool equality_at(int k) const {
    return gap(k) > 0 && gap(k) * gap(k) == gap(k - 1) * gap(k + 1);
  }
  bool flat_at(int k) const {
    return gap(k) > 0 && gap(k - 1) == gap(k) && gap(k) == gap(k + 1);
  }
  bool doubling_at(int k) const {
    return gap(k - 1) > 0 && gap(k) == 2 * gap(k - 1) &&
           gap(k + 1) == 4 * gap(k - 1);
  }
};

// Failure collector handed to checks.  Each hook invocation that returns
// without calling fail counts as one passed unit.
class CheckSink {
 public:
  virtual void fail(const std::string& note) = 0;

 protected:
  ~CheckSink() = default;
};

// A named invariant.  Either hook (or both) may be set; unset hooks are
// skipped.
struct Check {
  std::string name;
  std::function<void(const PosetContext&, CheckSink&)> on_poset;
  std::function<void(const PairContext&, CheckSink&)> on_pair;
};

// Expands a list of check and suite names into the checks themselves, in
// registry order without duplicates.  Suites:
//   main-theorems  logconcave vanish equality flat double mutex
//   structure      monotone dual augment partition count shape bijection
//                  extend
//   geometry       geometry
//   witness        witness
//   all            everything above
// Throws BadParameters for an unknown name.
std::vector<Check> resolve_checks(const std::vector<std::string>& names);

// Names of all built-in checks, registry order.
std::vector<std::string> builtin_check_names();

// ---------------------------------------------------------------------------
// Sweep driver.
// ---------------------------------------------------------------------------

struct SweepConfig {
  // Visit every labeled poset of every size from 2 to n_max (inclusive);
  // valid range [2, 8].
  int n_max = 5;
  // Restrict to canonical representatives (one poset per isomorphism
  // class).
  bool dedup = false;
  // Check and suite names, resolved by resolve_checks.
  std::vector<std::string> checks = {"all"};
  // Worker threads; results are identical for every value.
  int parallelism = 1;
  // Posets with more linear extensions than this are skipped and tallied in
  // posets_skipped.  Sizes with n! <= ceiling never skip (and never pay for
  // the pre-count).  Capped at 2^31 so that 64-bit count products are safe.
  std::uint64_t extension_ceiling = 2'000'000;
  // Counterexamples kept per check.
  int max_counterexamples = 10;
};

struct CheckTally {
  std::string name;
  std::uint64_t units = 0;  // hook invocations (poset- plus pair-level)
  std::uint64_t failures = 0;
};

struct Counterexample {
  std::string check;
  std::string note;
  // Position of the poset in the generation order of its size (stable
  // across runs and worker counts), and its size.
  std::uint64_t ordinal = 0;
  int n = 0;
  // The offending marked poset in the text exchange format.  Poset-level
  // failures are serialized with the first valid mark.
  std::string poset_text;
};

struct SweepResult {
  SweepConfig config;
  std::uint64_t posets_visited = 0;
  std::uint64_t posets_skipped = 0;
  std::uint64_t marked_pairs_visited = 0;
  std::vector<CheckTally> tallies;  // in resolved check order
  // Sorted by (check registry order, ordinal, note), truncated per check.
  std::vector<Counterexample> counterexamples;

  std::uint64_t total_failures() const;
  bool ok() const { return total_failures() == 0; }
};

// Runs the configured checks over every generated poset and every marked
// pair (ordered (x, y), x != y, y not below x).  extra_checks are appended
// after the built-ins resolved from cfg.checks; cfg.checks may be empty to
// run only extra_checks.  Tallies, counts and counterexamples do not depend
// on cfg.parallelism.  Throws BadParameters for out-of-range configuration.
SweepResult sweep(const SweepConfig& cfg,
                  const std::vector<Check>& extra_checks = {});

// Runs the named checks on one marked poset instead of a sweep: poset-level
// hooks once, pair-level hooks on the given mark only.
SweepResult verify_pair(const MarkedPoset& m,
                        const std::vector<std::string>& checks);

}  // namespace ksgap
