#include "ksgap/report.hpp"

#include "doctest.h"
#include "json.hpp"
#include "ksgap/errors.hpp"
#include "ksgap/generators.hpp"
#include "ksgap/harness.hpp"
#include "ksgap/poset.hpp"

#include <fstream>
#include <sstream>
#include <string>

using namespace ksgap;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("the two-tails level-2 geometry report matches the golden file") {
  const std::string got = analysis_json(two_tails_example(), 2, true);
  CHECK(got == slurp(std::string(TEST_DATA_DIR) + "/two_tails_report.json"));
}

TEST_CASE("analysis document structure") {
  const MarkedPoset m = two_tails_example();
  const auto doc = nlohmann::json::parse(analysis_json(m, {}, false));
  CHECK(doc["poset"]["n"] == 6);
  CHECK(doc["poset"]["x"] == 0);
  CHECK(doc["poset"]["labels"].size() == 6);
  CHECK(doc["extensions"]["total"] == "20");
  CHECK(doc["extensions"]["pair_ordered"] == "19");
  CHECK(doc["gap_sequence"] ==
        nlohmann::json({"1", "2", "4", "6", "6"}));
  CHECK(doc["levels"].size() == 5);  // every level without a filter
  CHECK(doc["levels"][0]["k"] == 1);
  CHECK(doc["levels"][4]["class"] == "Nonzero");
  CHECK_FALSE(doc.contains("geometry"));
}

TEST_CASE("level filter and geometry toggle") {
  const MarkedPoset m = two_tails_example();
  const auto doc = nlohmann::json::parse(analysis_json(m, 3, true));
  REQUIRE(doc["levels"].size() == 1);
  CHECK(doc["levels"][0]["k"] == 3);
  CHECK(doc["levels"][0]["class"] == "Strict");
  CHECK(doc.contains("geometry"));
  // Witness systems are attached only for interior filtered levels.
  CHECK(doc["geometry"]["witness"].size() == 2);
  const auto boundary = nlohmann::json::parse(analysis_json(m, 1, true));
  CHECK_FALSE(boundary["geometry"].contains("witness"));
  CHECK_THROWS_AS(analysis_json(m, 0, false), IndexOutOfRange);
  CHECK_THROWS_AS(analysis_json(m, 6, false), IndexOutOfRange);
}

TEST_CASE("analysis text names the key facts") {
  std::ostringstream out;
  analysis_text(out, two_tails_example(), {}, false);
  const std::string text = out.str();
  CHECK(text.find("gap sequence: 1 2 4 6 6") != std::string::npos);
  CHECK(text.find("class=Doubling") != std::string::npos);
  CHECK(text.find("x=x y=y") != std::string::npos);
  CHECK(text.find("flat_witness=x") != std::string::npos);
}

TEST_CASE("sweep reports round-trip the tallies") {
  SweepConfig cfg;
  cfg.n_max = 3;
  cfg.checks = {"main-theorems"};
  const SweepResult r = sweep(cfg);

  const auto doc = nlohmann::json::parse(sweep_json(r));
  CHECK(doc["config"]["n_max"] == 3);
  CHECK(doc["config"]["dedup"] == false);
  CHECK(doc["posets_visited"] == 22);
  CHECK(doc["posets_skipped"] == 0);
  CHECK(doc["marked_pairs_visited"] == r.marked_pairs_visited);
  CHECK(doc["ok"] == true);
  REQUIRE(doc["checks"].size() == 6);
  CHECK(doc["checks"][0]["name"] == "logconcave");
  CHECK(doc["checks"][0]["failures"] == 0);
  CHECK(doc["counterexamples"].empty());

  std::ostringstream out;
  sweep_text(out, r);
  const std::string text = out.str();
  CHECK(text.find("OK") != std::string::npos);
  CHECK(text.find("logconcave") != std::string::npos);
  CHECK(text.find("0 failures") != std::string::npos);
}

TEST_CASE("failed sweeps serialize their counterexamples") {
  Check broken;
  broken.name = "broken";
  broken.on_pair = [](const PairContext& ctx, CheckSink& sink) {
    if (ctx.n() == 2) sink.fail("saw " + std::to_string(ctx.gap(1)));
  };
  SweepConfig cfg;
  cfg.n_max = 2;
  cfg.checks = {};
  const SweepResult r = sweep(cfg, {broken});
  const auto doc = nlohmann::json::parse(sweep_json(r));
  CHECK(doc["ok"] == false);
  REQUIRE(doc["counterexamples"].size() == r.counterexamples.size());
  CHECK(doc["counterexamples"][0]["check"] == "broken");
  CHECK(doc["counterexamples"][0].contains("poset"));
  std::ostringstream out;
  sweep_text(out, r);
  CHECK(out.str().find("FAIL") != std::string::npos);
}
