#include "ksgap/poset_io.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

namespace ksgap {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (const char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line;
  if (const auto hash = body.find('#'); hash != std::string::npos)
    body.resize(hash);
  std::istringstream ss(body);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

struct MarkLine {
  std::string which;  // "x" or "y"
  std::string name;
};

MarkLine parse_mark_line(const std::vector<std::string>& toks, int lineno) {
  if (toks.size() != 3 || (toks[0] != "x" && toks[0] != "y") || toks[1] != "=")
    throw ParseError(lineno, "expected 'x = NAME' or 'y = NAME'");
  return {toks[0], toks[2]};
}

}  // namespace

MarkedPoset parse_marked_poset(std::istream& in) {
  enum class Section { Elements, Covers, Mark };
  Section section = Section::Elements;
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> covers;
  std::vector<MarkLine> marks;
  const auto lookup = [&](const std::string& name, int lineno) {
    const auto it = index.find(name);
    if (it == index.end())
      throw ParseError(lineno, "unknown element '" + name + "'");
    return it->second;
  };

  std::string line;
  int lineno = 0;
  bool saw_elements = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    switch (section) {
      case Section::Elements:
        if (toks[0] == "covers") {
          if (!saw_elements)
            throw ParseError(lineno, "'covers' before any elements line");
          if (toks.size() != 1)
            throw ParseError(lineno, "'covers' takes no arguments");
          section = Section::Covers;
          break;
        }
        if (toks[0] != "elements")
          throw ParseError(lineno, "expected an 'elements' line");
        if (toks.size() < 2)
          throw ParseError(lineno, "'elements' line names no elements");
        saw_elements = true;
        for (std::size_t i = 1; i < toks.size(); ++i) {
          const std::string& name = toks[i];
          if (!valid_name(name))
            throw ParseError(lineno, "invalid element name '" + name + "'");
          if (index.contains(name))
            throw ParseError(lineno, "duplicate element name '" + name + "'");
          index[name] = static_cast<int>(names.size());
          names.push_back(name);
          if (names.size() > 64)
            throw ParseError(lineno, "more than 64 elements");
        }
        break;
      case Section::Covers:
        if (toks[0] == "mark") {
          if (toks.size() != 1)
            throw ParseError(lineno, "'mark' takes no arguments");
          section = Section::Mark;
          break;
        }
        if (toks.size() != 3 || toks[1] != "<")
          throw ParseError(lineno, "expected 'NAME < NAME'");
        covers.emplace_back(lookup(toks[0], lineno), lookup(toks[2], lineno));
        break;
      case Section::Mark: {
        if (marks.size() == 2)
          throw ParseError(lineno, "extra content after the mark");
        const MarkLine ml = parse_mark_line(toks, lineno);
        for (const MarkLine& seen : marks)
          if (seen.which == ml.which)
            throw ParseError(lineno, "duplicate '" + ml.which + " =' line");
        lookup(ml.name, lineno);
        marks.push_back(ml);
        break;
      }
    }
  }
  if (section == Section::Elements)
    throw ParseError(lineno, "input ends before the 'covers' section");
  if (section == Section::Covers)
    throw ParseError(lineno, "input ends before the 'mark' section");
  if (marks.size() != 2)
    throw ParseError(lineno, "mark section needs both 'x =' and 'y =' lines");
  int x = -1;
  int y = -1;
  for (const MarkLine& ml : marks)
    (ml.which == "x" ? x : y) = index.at(ml.name);
  const Poset p = Poset::from_cover_relations(
      static_cast<int>(names.size()), covers, names);
  return MarkedPoset(p, x, y);
}

MarkedPoset parse_marked_poset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_marked_poset(in);
}

std::string render_marked_poset(const MarkedPoset& m) {
  const Poset& p = m.poset();
  std::map<std::string, int> seen;
  for (int z = 0; z < p.size(); ++z) {
    const std::string name = p.label(z);
    if (!valid_name(name))
      throw BadParameters("element label '" + name +
                          "' is not a renderable name");
    if (!seen.emplace(name, z).second)
      throw BadParameters("duplicate element label '" + name + "'");
  }
  std::ostringstream out;
  out << "elements";
  for (int z = 0; z < p.size(); ++z) out << ' ' << p.label(z);
  out << "\ncovers\n";
  for (const auto& [a, b] : p.cover_relations())
    out << p.label(a) << " < " << p.label(b) << "\n";
  out << "mark\nx = " << p.label(m.x()) << "\ny = " << p.label(m.y()) << "\n";
  return out.str();
}

}  // namespace ksgap
