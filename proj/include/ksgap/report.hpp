#pragma once

#include "ksgap/harness.hpp"
#include "ksgap/poset.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace ksgap {

// JSON documents with stable key order, 2-space indentation, trailing
// newline.  Exact counts are rendered as decimal strings, rationals as
// "p/q" strings, so no value is squeezed through floating point.

// Full analysis of one marked poset: the poset itself, extension counts,
// the gap sequence with per-level classification and condition profile, and
// the sequence shape.  only_k restricts the per-level section to one level
// (IndexOutOfRange when outside [1, n-1]).  with_geometry adds the polytope
// pair's dimensions and vertex counts, plus witness-system feasibility for
// the selected level when only_k names an interior level.
std::string analysis_json(const MarkedPoset& m, std::optional<int> only_k,
                          bool with_geometry);

// The same content as a human-readable text block.
void analysis_text(std::ostream& out, const MarkedPoset& m,
                   std::optional<int> only_k, bool with_geometry);

// Sweep outcome: configuration echo, visit counts, per-check tallies and
// the retained counterexamples.
std::string sweep_json(const SweepResult& r);
void sweep_text(std::ostream& out, const SweepResult& r);

}  // namespace ksgap
