#include "ksgap/cli.hpp"

#include "ksgap/errors.hpp"
#include "ksgap/generators.hpp"
#include "ksgap/harness.hpp"
#include "ksgap/poset_io.hpp"
#include "ksgap/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace ksgap {

namespace {

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  if (out.empty()) throw BadFlags("empty check list");
  return out;
}

MarkedPoset read_input(const std::string& path) {
  if (path == "-") return parse_marked_poset(std::cin);
  std::ifstream in(path);
  if (!in) throw BadFlags("cannot open input file: " + path);
  return parse_marked_poset(in);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"gap sequences of marked posets: counts, equality-case "
               "classification, and exhaustive verification"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit a built-in example poset");
  std::string example;
  std::vector<int> params;
  gen->add_option("name", example, "two-tails or chain-ladder")->required();
  gen->add_option("params", params,
                  "chain-ladder parameters r s t u v (default 6 3 6 2 2)")
      ->expected(0, 5);

  // analyze
  auto* analyze =
      app.add_subcommand("analyze", "analyze one marked poset");
  std::string input = "-";
  int level = 0;
  bool with_geometry = false;
  std::string a_format = "text";
  analyze->add_option("--input,-i", input,
                      "input file in the text format, - for stdin");
  auto* level_opt =
      analyze->add_option("--k,-k", level, "restrict to one level");
  analyze->add_flag("--geometry,-g", with_geometry,
                    "add polytope dimensions and witness systems");
  analyze->add_option("--format,-f", a_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // sweep
  auto* sw = app.add_subcommand(
      "sweep", "run checks over every poset up to a given size");
  int n_max = 5;
  bool dedup = false;
  std::string checks = "all";
  int jobs = 1;
  std::string s_format = "text";
  std::uint64_t ceiling = 2'000'000;
  int max_ces = 10;
  sw->add_option("--n,-n", n_max, "largest poset size (2 to 8)");
  sw->add_flag("--dedup", dedup, "one poset per isomorphism class");
  sw->add_option("--checks,-c", checks,
                 "comma-separated check or suite names (main-theorems, "
                 "structure, geometry, witness, all, or individual names)");
  sw->add_option("--jobs,-j", jobs, "worker threads");
  sw->add_option("--format,-f", s_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sw->add_option("--ext-ceiling", ceiling,
                 "skip posets with more linear extensions than this");
  sw->add_option("--max-counterexamples", max_ces,
                 "counterexamples kept per check");

  std::vector<const char*> argv;
  argv.push_back("ksgap");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (gen->parsed()) {
    MarkedPoset m = [&] {
      if (example == "two-tails") {
        if (!params.empty())
          throw BadFlags("two-tails takes no parameters");
        return two_tails_example();
      }
      if (example == "chain-ladder") {
        if (params.empty()) params = {6, 3, 6, 2, 2};
        if (params.size() != 5)
          throw BadFlags("chain-ladder needs five parameters r s t u v");
        return chain_ladder_example(params[0], params[1], params[2],
                                    params[3], params[4]);
      }
      throw BadFlags("unknown example: " + example);
    }();
    out << render_marked_poset(m);
    return 0;
  }

  if (analyze->parsed()) {
    const MarkedPoset m = read_input(input);
    std::optional<int> only_k;
    if (level_opt->count() > 0) {
      if (level < 1 || level > m.n() - 1)
        throw BadFlags("--k must lie in [1, " + std::to_string(m.n() - 1) +
                       "]");
      only_k = level;
    }
    if (a_format == "json")
      out << analysis_json(m, only_k, with_geometry);
    else
      analysis_text(out, m, only_k, with_geometry);
    return 0;
  }

  // sweep
  SweepConfig cfg;
  cfg.n_max = n_max;
  cfg.dedup = dedup;
  cfg.checks = split_names(checks);
  cfg.parallelism = jobs;
  cfg.extension_ceiling = ceiling;
  cfg.max_counterexamples = max_ces;
  const SweepResult result = sweep(cfg);
  if (s_format == "json")
    out << sweep_json(result);
  else
    sweep_text(out, result);
  return result.ok() ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadFlags& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadParameters& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CycleDetected& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const MarkViolation& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InequalityViolated& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ksgap
