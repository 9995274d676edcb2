// Tied link diagrams: planar-diagram crossings over arc labels, a color per
// arc, and crossingless free loops.
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tiedbracket {

using ArcId = std::uint32_t;
/// Color index; valid colors are 1..m.
using Color = int;

/// Four arc ends in counterclockwise order.  Slots 0 and 2 are the
/// under-strand, slots 1 and 3 the over-strand.
struct CrossingRecord {
  std::array<ArcId, 4> slots{};
  /// Position of this crossing in the diagram the resolution started from.
  /// Survives smoothings so tree paths can name crossings of the root.
  std::uint32_t origin = 0;

  ArcId under() const { return slots[0]; }
  ArcId over() const { return slots[1]; }

  friend bool operator==(const CrossingRecord&, const CrossingRecord&) = default;
};

enum class CrossingClass { IllegalType1, IllegalType2, Legal };

const char* to_string(CrossingClass cls);

struct Complexity {
  std::size_t total = 0;    // C_T
  std::size_t illegal = 0;  // C_I

  friend auto operator<=>(const Complexity&, const Complexity&) = default;
};

enum class DiagramErrorKind {
  DanglingArc,
  ColorMismatch,
  MissingColor,
  InvalidColor,
  EmptyDiagram,
  WrongClass,
  BadCrossingIndex,
  InvalidColorMap,
  ComponentCountMismatch,
};

class DiagramError : public std::runtime_error {
 public:
  DiagramError(DiagramErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  DiagramErrorKind kind() const { return kind_; }

 private:
  DiagramErrorKind kind_;
};

/// A closed curve of the diagram.  Free loops carry no arcs.
struct Component {
  std::vector<ArcId> arcs;  // sorted
  Color color = 0;
  bool free_loop = false;
};

/// Immutable value type.  Every smoothing returns a fresh diagram.
class TiedDiagram {
 public:
  using ArcColors = std::vector<std::pair<ArcId, Color>>;

  TiedDiagram() = default;
  /// arc_colors may be in any order; duplicates must agree.  No validation
  /// is performed here; call validate().
  TiedDiagram(std::vector<CrossingRecord> crossings, ArcColors arc_colors,
              std::vector<Color> free_loops);

  /// Colors the i-th crossing component (deterministic order, see
  /// components()) with component_colors[i].  Origins are set to positions.
  static TiedDiagram from_component_colors(std::vector<std::array<ArcId, 4>> crossings,
                                           const std::vector<Color>& component_colors,
                                           std::vector<Color> free_loops);

  const std::vector<CrossingRecord>& crossings() const { return crossings_; }
  const ArcColors& arc_colors() const { return arc_colors_; }
  const std::vector<Color>& free_loops() const { return free_loops_; }
  std::size_t crossing_count() const { return crossings_.size(); }

  /// Throws DiagramError(MissingColor) if the arc has no color.
  Color color_of(ArcId arc) const;
  bool has_color(ArcId arc) const;

  /// Number of distinct colors in use.
  std::size_t color_count() const;
  Color max_color() const;

  /// Renames colors to 1..m preserving their relative order.
  TiedDiagram normalized() const;

  /// Same diagram with every color c replaced by mapping(c).
  template <class Fn>
  TiedDiagram recolored(Fn&& mapping) const {
    TiedDiagram out = *this;
    for (auto& entry : out.arc_colors_) entry.second = mapping(entry.second);
    for (Color& c : out.free_loops_) c = mapping(c);
    return out;
  }

  friend bool operator==(const TiedDiagram&, const TiedDiagram&) = default;

 private:
  friend TiedDiagram reconnect(const TiedDiagram&, std::size_t,
                               std::array<std::pair<ArcId, ArcId>, 2>);

  std::vector<CrossingRecord> crossings_;
  ArcColors arc_colors_;  // sorted by arc
  std::vector<Color> free_loops_;
};

/// Throws DiagramError describing the first problem found.
void validate(const TiedDiagram& d);

/// Crossing components ordered by smallest ArcId, then free loops ordered by
/// color.
std::vector<Component> components(const TiedDiagram& d);
/// Same count as components(d).size() without materializing arc lists.
std::size_t component_count(const TiedDiagram& d);

CrossingClass classify(const TiedDiagram& d, std::size_t crossing);
std::vector<CrossingClass> classify_all(const TiedDiagram& d);
Complexity complexity(const TiedDiagram& d);
bool is_aj_state(const TiedDiagram& d);

enum class SameColorSmoothing { Bar0, Bar1 };
enum class MixedSmoothing { Zero, One, Two };

/// Smoothing of a same-colored crossing.  Bar0 joins s0-s3 and s1-s2, Bar1
/// joins s0-s1 and s2-s3.  Colors are untouched.
TiedDiagram smooth_type1(const TiedDiagram& d, std::size_t crossing, SameColorSmoothing kind);

/// Smoothing of a type-2 crossing (over color i below under color j).  Two
/// swaps the strands; Zero and One reconnect like Bar0 and Bar1 and then merge
/// color j into i.
TiedDiagram smooth_type2(const TiedDiagram& d, std::size_t crossing, MixedSmoothing kind);

/// Removes a crossing and joins the given arc pairs.  Arcs that close up into
/// crossingless circles move to free_loops.  Colors are not changed.
TiedDiagram reconnect(const TiedDiagram& d, std::size_t crossing,
                      std::array<std::pair<ArcId, ArcId>, 2> joins);

/// Disjoint union.  Arcs of d2 are relabeled above those of d1.  Without
/// shared colors, d2's colors are shifted above d1's; with shared colors,
/// color_map sends d2 colors to d1 colors and unmapped d2 colors get fresh
/// indices.  The result is normalized.
TiedDiagram disjoint_union(const TiedDiagram& d1, const TiedDiagram& d2, bool share_colors,
                           const std::map<Color, Color>& color_map = {});

/// String invariant under arc relabeling and crossing reordering.
std::string canonical_code(const TiedDiagram& d);

}  // namespace tiedbracket
