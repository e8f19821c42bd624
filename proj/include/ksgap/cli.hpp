#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksgap {

// Runs the command-line tool on args (program name excluded), writing to
// the given streams.  Subcommands:
//
//   gen two-tails                     emit the six-element two-tail example
//   gen chain-ladder [r s t u v]      emit the threaded-chains family
//                                     (default parameters 6 3 6 2 2)
//   analyze [--input F] [--k K] [--geometry] [--format text|json]
//                                     read a marked poset (file or stdin)
//                                     and print its analysis
//   sweep [--n N] [--dedup] [--checks LIST] [--jobs J] [--format text|json]
//         [--ext-ceiling C] [--max-counterexamples M]
//                                     run checks over all posets up to N
//
// Exit codes: 0 success, 1 a sweep reported failures, 2 malformed input or
// flags, 3 domain violations (cycles, invalid marks, contradictory
// classification data).
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace ksgap
