#include "statesum/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace statesum {

void Diagram::add_crossing(std::string nm, CrossingKind kind) {
  crossings.push_back({std::move(nm), kind});
}

void Diagram::add_edge(SlotRef a, SlotRef b) { edges.push_back({std::move(a), std::move(b)}); }

void Diagram::finalize() {
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.name < b.name; });
}

const Crossing* Diagram::find(std::string_view nm) const {
  for (const auto& c : crossings)
    if (c.name == nm) return &c;
  return nullptr;
}

int Diagram::crossing_index(std::string_view nm) const {
  for (size_t i = 0; i < crossings.size(); ++i)
    if (crossings[i].name == nm) return static_cast<int>(i);
  return -1;
}

size_t Diagram::classical_count() const {
  size_t n = 0;
  for (const auto& c : crossings)
    if (c.kind == CrossingKind::classical) ++n;
  return n;
}

bool Diagram::has_virtual() const {
  for (const auto& c : crossings)
    if (c.kind == CrossingKind::virtual_crossing) return true;
  return false;
}

namespace {

SlotRef parse_slotref(const std::string& token, int line) {
  auto dot = token.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= token.size())
    throw DiagramParseError(line, "expected <crossing>.<slot>, got '" + token + "'");
  const std::string slot_part = token.substr(dot + 1);
  if (slot_part.size() != 1 || slot_part[0] < '0' || slot_part[0] > '3')
    throw DiagramParseError(line, "slot must be 0..3 in '" + token + "'");
  return {token.substr(0, dot), slot_part[0] - '0'};
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  Diagram d;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string kw;
    if (!(line >> kw)) continue;
    if (kw == "link") {
      if (!(line >> d.name)) throw DiagramParseError(lineno, "link needs a name");
    } else if (kw == "crossing") {
      std::string nm, kind;
      if (!(line >> nm >> kind)) throw DiagramParseError(lineno, "crossing needs <name> <c|v>");
      if (kind != "c" && kind != "v")
        throw DiagramParseError(lineno, "crossing kind must be c or v, got '" + kind + "'");
      if (d.find(nm)) throw DiagramParseError(lineno, "duplicate crossing '" + nm + "'");
      d.add_crossing(nm, kind == "c" ? CrossingKind::classical : CrossingKind::virtual_crossing);
    } else if (kw == "edge") {
      std::string ta, tb;
      if (!(line >> ta >> tb)) throw DiagramParseError(lineno, "edge needs two slot refs");
      SlotRef a = parse_slotref(ta, lineno);
      SlotRef b = parse_slotref(tb, lineno);
      for (const auto& s : {a, b})
        if (!d.find(s.crossing))
          throw DiagramParseError(lineno, "unknown crossing '" + s.crossing + "'");
      d.add_edge(a, b);
    } else if (kw == "loops:") {
      int k = -1;
      if (!(line >> k) || k < 0) throw DiagramParseError(lineno, "loops: needs a count >= 0");
      d.free_loops = k;
    } else if (kw == "orient") {
      std::string t;
      if (!(line >> t)) throw DiagramParseError(lineno, "orient needs a slot ref");
      SlotRef s = parse_slotref(t, lineno);
      if (!d.find(s.crossing))
        throw DiagramParseError(lineno, "unknown crossing '" + s.crossing + "'");
      d.orientation_hints.push_back(s);
    } else {
      throw DiagramParseError(lineno, "unknown keyword '" + kw + "'");
    }
    std::string extra;
    if (line >> extra) throw DiagramParseError(lineno, "trailing token '" + extra + "'");
  }
  d.finalize();
  return d;
}

std::string serialize(const Diagram& d) {
  std::ostringstream out;
  if (!d.name.empty()) out << "link " << d.name << "\n";
  std::vector<Crossing> cs = d.crossings;
  std::sort(cs.begin(), cs.end(),
            [](const Crossing& a, const Crossing& b) { return a.name < b.name; });
  for (const auto& c : cs)
    out << "crossing " << c.name << ' '
        << (c.kind == CrossingKind::classical ? 'c' : 'v') << "\n";
  std::vector<std::pair<SlotRef, SlotRef>> es;
  es.reserve(d.edges.size());
  for (const auto& e : d.edges) {
    auto p = std::minmax(e.a, e.b);
    es.emplace_back(p.first, p.second);
  }
  std::sort(es.begin(), es.end());
  for (const auto& [a, b] : es)
    out << "edge " << a.crossing << '.' << a.slot << ' ' << b.crossing << '.' << b.slot << "\n";
  if (d.free_loops > 0) out << "loops: " << d.free_loops << "\n";
  for (const auto& s : d.orientation_hints) out << "orient " << s.crossing << '.' << s.slot << "\n";
  return out.str();
}

std::vector<ValidationIssue> validate(const Diagram& d) {
  std::vector<ValidationIssue> issues;
  if (d.free_loops < 0) issues.push_back({"free_loops is negative"});
  std::map<SlotRef, int> uses;
  for (const auto& e : d.edges) {
    if (e.a == e.b) {
      issues.push_back({"edge joins " + e.a.crossing + "." + std::to_string(e.a.slot) +
                        " to itself"});
      continue;
    }
    for (const auto& s : {e.a, e.b}) {
      if (!d.find(s.crossing)) {
        issues.push_back({"edge references unknown crossing '" + s.crossing + "'"});
        continue;
      }
      if (++uses[s] > 1)
        issues.push_back({"slot " + s.crossing + "." + std::to_string(s.slot) +
                          " appears in more than one edge"});
    }
  }
  for (const auto& c : d.crossings)
    for (int s = 0; s < 4; ++s)
      if (!uses.count({c.name, s}))
        issues.push_back({"slot " + c.name + "." + std::to_string(s) + " is not covered by any edge"});
  return issues;
}

void require_valid(const Diagram& d) {
  auto issues = validate(d);
  if (!issues.empty())
    throw InvalidDiagramError("invalid diagram" + (d.name.empty() ? "" : " '" + d.name + "'") +
                              ": " + issues.front().message +
                              (issues.size() > 1
                                   ? " (+" + std::to_string(issues.size() - 1) + " more)"
                                   : ""));
}

namespace {

/// mate[4*ci + slot] = the slot id paired by the unique covering edge.
std::vector<int> mate_table(const Diagram& d) {
  std::vector<int> mate(4 * d.crossings.size(), -1);
  for (const auto& e : d.edges) {
    int a = 4 * d.crossing_index(e.a.crossing) + e.a.slot;
    int b = 4 * d.crossing_index(e.b.crossing) + e.b.slot;
    mate[a] = b;
    mate[b] = a;
  }
  return mate;
}

}  // namespace

StrandComponents components(const Diagram& d) {
  require_valid(d);
  const auto mate = mate_table(d);
  StrandComponents result;
  result.free_loops = d.free_loops;
  std::vector<bool> seen(mate.size(), false);
  auto trace = [&](int start) {
    std::vector<SlotRef> cycle;
    int cur = start;  // slot we exit from
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back({d.crossings[cur / 4].name, cur % 4});
      int entry = mate[cur];
      seen[entry] = true;
      cur = (entry & ~3) | ((entry + 2) & 3);
    }
    result.cycles.push_back(std::move(cycle));
  };
  for (const auto& hint : d.orientation_hints) {
    int id = 4 * d.crossing_index(hint.crossing) + hint.slot;
    if (!seen[id]) trace(id);
  }
  for (size_t i = 0; i < mate.size(); ++i)
    if (!seen[i]) trace(static_cast<int>(i));
  return result;
}

int writhe(const Diagram& d) { return writhe(d, d.orientation_hints); }

int writhe(const Diagram& d, const std::vector<SlotRef>& hints) {
  Diagram oriented = d;
  oriented.orientation_hints = hints;
  const auto comps = components(oriented);
  std::vector<bool> exits(4 * d.crossings.size(), false);
  for (const auto& cycle : comps.cycles)
    for (const auto& s : cycle) exits[4 * d.crossing_index(s.crossing) + s.slot] = true;
  int w = 0;
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    if (d.crossings[ci].kind != CrossingKind::classical) continue;
    const int over_exit = exits[4 * ci + 0] ? 0 : 2;
    const int under_exit = exits[4 * ci + 1] ? 1 : 3;
    w += under_exit == (over_exit + 1) % 4 ? 1 : -1;
  }
  return w;
}

}  // namespace statesum
