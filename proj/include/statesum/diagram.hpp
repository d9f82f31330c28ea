#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace statesum {

enum class CrossingKind { classical, virtual_crossing };

struct Crossing {
  std::string name;
  CrossingKind kind = CrossingKind::classical;
  bool operator==(const Crossing&) const = default;
};

/// One of the four edge-ends of a crossing. Slots 0..3 run anticlockwise;
/// even slots lie on the overcrossing strand, odd slots on the undercrossing
/// strand (for a virtual crossing the two formal transversal strands).
struct SlotRef {
  std::string crossing;
  int slot = 0;
  bool operator==(const SlotRef&) const = default;
  auto operator<=>(const SlotRef&) const = default;
};

struct Edge {
  SlotRef a;
  SlotRef b;
  bool operator==(const Edge&) const = default;
};

struct DiagramParseError : std::runtime_error {
  DiagramParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// An embedding presentation: crossings with anticlockwise slot rotations,
/// edges pairing slots, plus crossing-free closed components. Immutable in
/// use; build with the setters, then validate.
class Diagram {
 public:
  std::string name;
  std::vector<Crossing> crossings;  // sorted by name after finalize
  std::vector<Edge> edges;
  int free_loops = 0;
  std::vector<SlotRef> orientation_hints;

  void add_crossing(std::string nm, CrossingKind kind);
  void add_edge(SlotRef a, SlotRef b);

  /// Sorts crossings by name. Called by parse/builders before validation.
  void finalize();

  const Crossing* find(std::string_view nm) const;
  int crossing_index(std::string_view nm) const;  // -1 if absent
  size_t classical_count() const;
  bool has_virtual() const;

  bool operator==(const Diagram&) const = default;
};

/// Parses the line grammar: `link <name>`, `crossing <name> <c|v>`,
/// `edge <name>.<slot> <name>.<slot>`, `loops: <k>`, `orient <name>.<slot>`,
/// comments with `#`. Throws DiagramParseError with the offending line.
Diagram parse_diagram(std::string_view text);

/// Canonical text: crossings sorted by name, edges sorted with each edge's
/// endpoints ordered; parse(serialize(d)) == d up to ordering.
std::string serialize(const Diagram& d);

struct ValidationIssue {
  std::string message;
};

/// Empty result iff every slot of every crossing lies in exactly one edge
/// and no edge joins a slot to itself.
std::vector<ValidationIssue> validate(const Diagram& d);

struct InvalidDiagramError : std::runtime_error {
  explicit InvalidDiagramError(const std::string& what) : std::runtime_error(what) {}
};

/// Throws InvalidDiagramError listing the first issue if validation fails.
void require_valid(const Diagram& d);

struct StrandComponents {
  /// Each component is the cyclic sequence of slots the strand exits from.
  std::vector<std::vector<SlotRef>> cycles;
  int free_loops = 0;
  size_t count() const { return cycles.size() + static_cast<size_t>(free_loops); }
};

/// Strand traversal: entering a crossing at slot k leaves at slot (k+2) mod 4.
/// Both classical and virtual crossings are traversed unsmoothed.
StrandComponents components(const Diagram& d);

/// Writhe under default traversal orientations (or the diagram's
/// orientation_hints): sum of crossing signs, +1 when the understrand exits
/// one slot anticlockwise of the overstrand exit, -1 one slot clockwise.
/// Virtual crossings contribute 0.
int writhe(const Diagram& d);
int writhe(const Diagram& d, const std::vector<SlotRef>& hints);

}  // namespace statesum
