#include "ksgap/report.hpp"

#include "ksgap/classify.hpp"
#include "ksgap/conditions.hpp"
#include "ksgap/errors.hpp"
#include "ksgap/geometry.hpp"
#include "ksgap/linext.hpp"
#include "ksgap/numbers.hpp"
#include "ksgap/poset_io.hpp"

#include "json.hpp"

#include <ostream>
#include <sstream>

namespace ksgap {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json segment_json(const ShapeReport::Segment& s) {
  if (s.empty()) return nullptr;
  return ordered_json::array({s.lo, s.hi});
}

ordered_json conditions_json(const ConditionProfile& cp) {
  ordered_json j;
  j["crowd_above"] = cp.crowd_above;
  j["crowd_below"] = cp.crowd_below;
  j["thick_below_y"] = cp.thick_below_y;
  j["thick_above_x"] = cp.thick_above_x;
  j["cross_chain_thick"] = cp.cross_chain_thick;
  j["between_empty"] = cp.between_empty;
  j["incomp_both_empty"] = cp.incomp_both_empty;
  return j;
}

ordered_json level_json(const MarkedPoset& m, const GapSequence& gs, int k,
                        const std::vector<LinearExtension>& exts) {
  ordered_json j;
  j["k"] = k;
  j["count"] = to_decimal_string(gs.at(k));
  j["class"] = to_string(classify_level(gs, k));
  j["conditions"] = conditions_json(condition_profile(m, k));
  j["vanishes"] = gap_count_vanishes(m, k);
  const auto w = flat_witness(m, k, exts);
  j["flat_witness"] =
      w ? ordered_json(m.poset().label(*w)) : ordered_json(nullptr);
  j["doubling_structure"] = doubling_structure(m, k);
  return j;
}

ordered_json witness_json(const MarkedPoset& m, int k, const Rational& a) {
  ordered_json j;
  j["a"] = to_fraction_string(a);
  const WitnessSystem ws = solve_witness(m, k, a);
  j["augmented"] = ws.augmented;
  j["rows"] = ws.rows.size();
  j["feasible"] = ws.solution.feasible;
  if (ws.solution.feasible) {
    ordered_json v = ordered_json::array();
    for (const auto& r : ws.solution.particular)
      v.push_back(to_fraction_string(r));
    j["particular"] = v;
    j["null_dimension"] = ws.solution.null_basis.size();
    j["rules"] = check_witness_rules(ws);
  } else {
    j["particular"] = nullptr;
    j["null_dimension"] = nullptr;
    j["rules"] = nullptr;
  }
  return j;
}

ordered_json geometry_json(const MarkedPoset& m, std::optional<int> only_k) {
  ordered_json j;
  const Polytope k_body = equal_pair_slice(m);
  const Polytope l_body = split_pair_face(m);
  j["equal_pair_slice"] = {{"vertices", k_body.vertices.size()},
                           {"dimension", dimension(k_body)}};
  j["split_pair_face"] = {{"vertices", l_body.vertices.size()},
                          {"dimension", dimension(l_body)}};
  j["sum_dimension"] = sum_dimension(k_body, l_body);
  if (only_k && *only_k >= 2 && *only_k <= m.n() - 2) {
    ordered_json w = ordered_json::array();
    w.push_back(witness_json(m, *only_k, Rational(1)));
    w.push_back(witness_json(m, *only_k, Rational(1, 2)));
    j["witness"] = w;
  }
  return j;
}

ordered_json analysis_doc(const MarkedPoset& m, std::optional<int> only_k,
                          bool with_geometry) {
  const int n = m.n();
  if (only_k && (*only_k < 1 || *only_k > n - 1))
    throw IndexOutOfRange("level " + std::to_string(*only_k) +
                          " outside [1, " + std::to_string(n - 1) + "]");
  ordered_json j;
  {
    ordered_json p;
    p["n"] = n;
    ordered_json labels = ordered_json::array();
    for (int z = 0; z < n; ++z) labels.push_back(m.poset().label(z));
    p["labels"] = labels;
    ordered_json covers = ordered_json::array();
    for (const auto& [a, b] : m.poset().cover_relations())
      covers.push_back(ordered_json::array({a, b}));
    p["covers"] = covers;
    p["x"] = m.x();
    p["y"] = m.y();
    j["poset"] = p;
  }
  const auto exts = all_extensions(m.poset());
  const GapSequence gs = gap_sequence(m);
  j["extensions"] = {{"total", std::to_string(exts.size())},
                     {"pair_ordered", to_decimal_string(gs.total())}};
  {
    ordered_json seq = ordered_json::array();
    for (int k = 1; k <= n - 1; ++k)
      seq.push_back(to_decimal_string(gs.at(k)));
    j["gap_sequence"] = seq;
  }
  {
    const ShapeReport s = shape_report(gs);
    ordered_json sh;
    sh["head"] = segment_json(s.head);
    sh["rise"] = segment_json(s.rise);
    sh["plateau"] = segment_json(s.plateau);
    sh["fall"] = segment_json(s.fall);
    sh["tail"] = segment_json(s.tail);
    sh["doubling_levels"] = s.doubling_levels;
    j["shape"] = sh;
  }
  {
    ordered_json levels = ordered_json::array();
    for (int k = 1; k <= n - 1; ++k) {
      if (only_k && k != *only_k) continue;
      levels.push_back(level_json(m, gs, k, exts));
    }
    j["levels"] = levels;
  }
  if (with_geometry) j["geometry"] = geometry_json(m, only_k);
  return j;
}

ordered_json sweep_doc(const SweepResult& r) {
  ordered_json j;
  {
    ordered_json c;
    c["n_max"] = r.config.n_max;
    c["dedup"] = r.config.dedup;
    c["checks"] = r.config.checks;
    c["parallelism"] = r.config.parallelism;
    c["extension_ceiling"] = r.config.extension_ceiling;
    c["max_counterexamples"] = r.config.max_counterexamples;
    j["config"] = c;
  }
  j["posets_visited"] = r.posets_visited;
  j["posets_skipped"] = r.posets_skipped;
  j["marked_pairs_visited"] = r.marked_pairs_visited;
  {
    ordered_json checks = ordered_json::array();
    for (const auto& t : r.tallies)
      checks.push_back({{"name", t.name},
                        {"units", t.units},
                        {"failures", t.failures}});
    j["checks"] = checks;
  }
  {
    ordered_json ces = ordered_json::array();
    for (const auto& ce : r.counterexamples)
      ces.push_back({{"check", ce.check},
                     {"note", ce.note},
                     {"n", ce.n},
                     {"ordinal", ce.ordinal},
                     {"poset", ce.poset_text}});
    j["counterexamples"] = ces;
  }
  j["ok"] = r.ok();
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string analysis_json(const MarkedPoset& m, std::optional<int> only_k,
                          bool with_geometry) {
  return dump(analysis_doc(m, only_k, with_geometry));
}

void analysis_text(std::ostream& out, const MarkedPoset& m,
                   std::optional<int> only_k, bool with_geometry) {
  const ordered_json j = analysis_doc(m, only_k, with_geometry);
  out << "poset: n=" << j["poset"]["n"] << " x=" << m.poset().label(m.x())
      << " y=" << m.poset().label(m.y()) << "\n";
  out << "covers:";
  for (const auto& c : j["poset"]["covers"])
    out << ' ' << m.poset().label(c[0].get<int>()) << '<'
        << m.poset().label(c[1].get<int>());
  out << "\n";
  out << "extensions: total=" << j["extensions"]["total"].get<std::string>()
      << " with pair in order="
      << j["extensions"]["pair_ordered"].get<std::string>() << "\n";
  out << "gap sequence:";
  for (const auto& c : j["gap_sequence"]) out << ' ' << c.get<std::string>();
  out << "\n";
  auto seg = [&](const char* name, const ordered_json& s) {
    out << ' ' << name << '=';
    if (s.is_null())
      out << "-";
    else
      out << '[' << s[0] << ',' << s[1] << ']';
  };
  out << "shape:";
  seg("head", j["shape"]["head"]);
  seg("rise", j["shape"]["rise"]);
  seg("plateau", j["shape"]["plateau"]);
  seg("fall", j["shape"]["fall"]);
  seg("tail", j["shape"]["tail"]);
  out << "\n";
  for (const auto& lev : j["levels"]) {
    out << "k=" << lev["k"] << " count=" << lev["count"].get<std::string>()
        << " class=" << lev["class"].get<std::string>();
    const auto& cp = lev["conditions"];
    out << " [M=" << cp["crowd_above"].get<bool>()
        << " M*=" << cp["crowd_below"].get<bool>()
        << " E=" << cp["thick_below_y"].get<bool>()
        << " E*=" << cp["thick_above_x"].get<bool>()
        << " C=" << cp["cross_chain_thick"].get<bool>() << ']';
    if (!lev["flat_witness"].is_null())
      out << " flat_witness=" << lev["flat_witness"].get<std::string>();
    if (lev["doubling_structure"].get<bool>()) out << " doubling_structure";
    out << "\n";
  }
  if (with_geometry) {
    const auto& g = j["geometry"];
    out << "geometry: dim(K)=" << g["equal_pair_slice"]["dimension"]
        << " vertices(K)=" << g["equal_pair_slice"]["vertices"]
        << " dim(L)=" << g["split_pair_face"]["dimension"]
        << " vertices(L)=" << g["split_pair_face"]["vertices"]
        << " dim(K+L)=" << g["sum_dimension"] << "\n";
    if (g.contains("witness"))
      for (const auto& w : g["witness"]) {
        out << "witness a=" << w["a"].get<std::string>()
            << " rows=" << w["rows"] << " feasible="
            << w["feasible"].get<bool>();
        if (w["feasible"].get<bool>())
          out << " null_dimension=" << w["null_dimension"]
              << " rules=" << w["rules"].get<bool>();
        out << "\n";
      }
  }
}

std::string sweep_json(const SweepResult& r) { return dump(sweep_doc(r)); }

void sweep_text(std::ostream& out, const SweepResult& r) {
  out << "sweep: n_max=" << r.config.n_max
      << " dedup=" << (r.config.dedup ? "yes" : "no")
      << " parallelism=" << r.config.parallelism << "\n";
  out << "visited " << r.posets_visited << " posets ("
      << r.posets_skipped << " skipped), " << r.marked_pairs_visited
      << " marked pairs\n";
  for (const auto& t : r.tallies)
    out << "  " << t.name << ": " << t.units << " units, " << t.failures
        << " failures\n";
  for (const auto& ce : r.counterexamples) {
    out << "counterexample [" << ce.check << "] n=" << ce.n << " #"
        << ce.ordinal << ": " << ce.note << "\n";
    std::istringstream lines(ce.poset_text);
    std::string line;
    while (std::getline(lines, line)) out << "    " << line << "\n";
  }
  out << (r.ok() ? "OK" : "FAILURES FOUND") << "\n";
}

}  // namespace ksgap
