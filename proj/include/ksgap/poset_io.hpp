#pragma once

#include "ksgap/poset.hpp"

#include <iosfwd>
#include <string>

namespace ksgap {

// Text format for marked posets.  Line oriented; '#' starts a comment that
// runs to the end of the line; blank lines are ignored.  Three sections in
// order:
//
//   elements NAME NAME ...      one or more lines naming the elements in
//                               index order; names match [A-Za-z0-9_]+ and
//                               must be pairwise distinct
//   covers                      section marker, then zero or more lines
//   NAME < NAME                 each declaring one order relation
//   mark                        section marker, then exactly two lines
//   x = NAME
//   y = NAME                    (in either order)
//
// parse_marked_poset throws ParseError (with a 1-based line number) for
// malformed input, CycleDetected if the declared relations are cyclic, and
// MarkViolation if the marked pair is invalid.
MarkedPoset parse_marked_poset(std::istream& in);
MarkedPoset parse_marked_poset_text(const std::string& text);

// Canonical rendering: one elements line, the cover relations of the poset
// sorted by index pair, and the mark.  parse(render(m)) == m.  Throws
// BadParameters if the labels are not distinct names over [A-Za-z0-9_]+.
std::string render_marked_poset(const MarkedPoset& m);

}  // namespace ksgap
