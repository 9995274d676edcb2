#include "tiedbracket/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tiedbracket {

const char* to_string(CrossingClass cls) {
  switch (cls) {
    case CrossingClass::IllegalType1: return "illegal-1";
    case CrossingClass::IllegalType2: return "illegal-2";
    case CrossingClass::Legal: return "legal";
  }
  return "?";
}

namespace {

// Union-find over a small dense index range.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<ArcId> used_arcs(const std::vector<CrossingRecord>& crossings) {
  std::vector<ArcId> arcs;
  arcs.reserve(crossings.size() * 4);
  for (const auto& c : crossings) arcs.insert(arcs.end(), c.slots.begin(), c.slots.end());
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

std::size_t dense_index(const std::vector<ArcId>& arcs, ArcId arc) {
  return static_cast<std::size_t>(std::lower_bound(arcs.begin(), arcs.end(), arc) - arcs.begin());
}

// Strand continuity: s0 with s2, s1 with s3.
DisjointSets strand_sets(const std::vector<CrossingRecord>& crossings,
                         const std::vector<ArcId>& arcs, std::size_t& merges) {
  DisjointSets sets(arcs.size());
  merges = 0;
  for (const auto& c : crossings) {
    if (sets.unite(dense_index(arcs, c.slots[0]), dense_index(arcs, c.slots[2]))) ++merges;
    if (sets.unite(dense_index(arcs, c.slots[1]), dense_index(arcs, c.slots[3]))) ++merges;
  }
  return sets;
}

std::vector<Color> distinct_colors(const TiedDiagram& d) {
  std::vector<Color> colors;
  colors.reserve(d.arc_colors().size() + d.free_loops().size());
  for (const auto& [arc, color] : d.arc_colors()) colors.push_back(color);
  colors.insert(colors.end(), d.free_loops().begin(), d.free_loops().end());
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

void check_index(const TiedDiagram& d, std::size_t crossing) {
  if (crossing >= d.crossing_count()) {
    throw DiagramError(DiagramErrorKind::BadCrossingIndex,
                       "crossing index " + std::to_string(crossing) + " out of range");
  }
}

}  // namespace

TiedDiagram::TiedDiagram(std::vector<CrossingRecord> crossings, ArcColors arc_colors,
                         std::vector<Color> free_loops)
    : crossings_(std::move(crossings)),
      arc_colors_(std::move(arc_colors)),
      free_loops_(std::move(free_loops)) {
  std::sort(arc_colors_.begin(), arc_colors_.end());
  for (std::size_t i = 1; i < arc_colors_.size(); ++i) {
    if (arc_colors_[i].first == arc_colors_[i - 1].first &&
        arc_colors_[i].second != arc_colors_[i - 1].second) {
      throw DiagramError(DiagramErrorKind::ColorMismatch,
                         "arc " + std::to_string(arc_colors_[i].first) + " given two colors");
    }
  }
  arc_colors_.erase(std::unique(arc_colors_.begin(), arc_colors_.end()), arc_colors_.end());
  std::sort(free_loops_.begin(), free_loops_.end());
}

TiedDiagram TiedDiagram::from_component_colors(std::vector<std::array<ArcId, 4>> crossings,
                                               const std::vector<Color>& component_colors,
                                               std::vector<Color> free_loops) {
  std::vector<CrossingRecord> records;
  records.reserve(crossings.size());
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    records.push_back(CrossingRecord{crossings[i], static_cast<std::uint32_t>(i)});
  }
  // Color everything 1 first so components() can run, then assign.
  ArcColors provisional;
  for (ArcId arc : used_arcs(records)) provisional.emplace_back(arc, 1);
  TiedDiagram uncolored(records, provisional, {});
  auto comps = components(uncolored);
  if (comps.size() != component_colors.size()) {
    throw DiagramError(DiagramErrorKind::ComponentCountMismatch,
                       "diagram has " + std::to_string(comps.size()) + " components but " +
                           std::to_string(component_colors.size()) + " colors were given");
  }
  ArcColors colors;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (ArcId arc : comps[i].arcs) colors.emplace_back(arc, component_colors[i]);
  }
  return TiedDiagram(std::move(records), std::move(colors), std::move(free_loops));
}

bool TiedDiagram::has_color(ArcId arc) const {
  auto it = std::lower_bound(arc_colors_.begin(), arc_colors_.end(), arc,
                             [](const auto& entry, ArcId a) { return entry.first < a; });
  return it != arc_colors_.end() && it->first == arc;
}

Color TiedDiagram::color_of(ArcId arc) const {
  auto it = std::lower_bound(arc_colors_.begin(), arc_colors_.end(), arc,
                             [](const auto& entry, ArcId a) { return entry.first < a; });
  if (it == arc_colors_.end() || it->first != arc) {
    throw DiagramError(DiagramErrorKind::MissingColor,
                       "arc " + std::to_string(arc) + " has no color");
  }
  return it->second;
}

std::size_t TiedDiagram::color_count() const { return distinct_colors(*this).size(); }

Color TiedDiagram::max_color() const {
  auto colors = distinct_colors(*this);
  return colors.empty() ? 0 : colors.back();
}

TiedDiagram TiedDiagram::normalized() const {
  auto colors = distinct_colors(*this);
  if (!colors.empty() && colors.front() == 1 && colors.back() == static_cast<Color>(colors.size())) {
    return *this;
  }
  return recolored([&](Color c) {
    return static_cast<Color>(std::lower_bound(colors.begin(), colors.end(), c) - colors.begin()) + 1;
  });
}

void validate(const TiedDiagram& d) {
  if (d.crossings().empty() && d.free_loops().empty()) {
    throw DiagramError(DiagramErrorKind::EmptyDiagram, "diagram has no components");
  }
  std::map<ArcId, int> occurrences;
  for (const auto& c : d.crossings()) {
    for (ArcId arc : c.slots) ++occurrences[arc];
  }
  for (const auto& [arc, count] : occurrences) {
    if (count != 2) {
      throw DiagramError(DiagramErrorKind::DanglingArc,
                         "arc " + std::to_string(arc) + " occurs " + std::to_string(count) +
                             " times");
    }
    Color color = d.color_of(arc);
    if (color < 1) {
      throw DiagramError(DiagramErrorKind::InvalidColor,
                         "arc " + std::to_string(arc) + " has non-positive color");
    }
  }
  for (Color c : d.free_loops()) {
    if (c < 1) throw DiagramError(DiagramErrorKind::InvalidColor, "free loop has non-positive color");
  }
  for (const auto& c : d.crossings()) {
    if (d.color_of(c.slots[0]) != d.color_of(c.slots[2]) ||
        d.color_of(c.slots[1]) != d.color_of(c.slots[3])) {
      throw DiagramError(DiagramErrorKind::ColorMismatch,
                         "a strand changes color at crossing " + std::to_string(c.origin));
    }
  }
}

std::vector<Component> components(const TiedDiagram& d) {
  const auto arcs = used_arcs(d.crossings());
  std::size_t merges = 0;
  auto sets = strand_sets(d.crossings(), arcs, merges);
  // Roots are the smallest dense index of their class, so visiting arcs in
  // sorted order lists components by smallest ArcId.
  std::vector<Component> out;
  std::vector<std::size_t> slot_of_root(arcs.size(), SIZE_MAX);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::size_t root = sets.find(i);
    if (slot_of_root[root] == SIZE_MAX) {
      slot_of_root[root] = out.size();
      out.push_back(Component{{}, d.has_color(arcs[i]) ? d.color_of(arcs[i]) : 0, false});
    }
    out[slot_of_root[root]].arcs.push_back(arcs[i]);
  }
  for (Color c : d.free_loops()) out.push_back(Component{{}, c, true});
  return out;
}

std::size_t component_count(const TiedDiagram& d) {
  const auto arcs = used_arcs(d.crossings());
  std::size_t merges = 0;
  strand_sets(d.crossings(), arcs, merges);
  return arcs.size() - merges + d.free_loops().size();
}

CrossingClass classify(const TiedDiagram& d, std::size_t crossing) {
  check_index(d, crossing);
  const auto& c = d.crossings()[crossing];
  const Color over = d.color_of(c.slots[1]);
  const Color under = d.color_of(c.slots[0]);
  if (over == under) return CrossingClass::IllegalType1;
  return over < under ? CrossingClass::IllegalType2 : CrossingClass::Legal;
}

std::vector<CrossingClass> classify_all(const TiedDiagram& d) {
  std::vector<CrossingClass> out;
  out.reserve(d.crossing_count());
  for (std::size_t i = 0; i < d.crossing_count(); ++i) out.push_back(classify(d, i));
  return out;
}

Complexity complexity(const TiedDiagram& d) {
  Complexity out{d.crossing_count(), 0};
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    if (classify(d, i) != CrossingClass::Legal) ++out.illegal;
  }
  return out;
}

bool is_aj_state(const TiedDiagram& d) { return complexity(d).illegal == 0; }

TiedDiagram reconnect(const TiedDiagram& d, std::size_t crossing,
                      std::array<std::pair<ArcId, ArcId>, 2> joins) {
  check_index(d, crossing);
  TiedDiagram out;
  out.crossings_.reserve(d.crossings_.size() - 1);
  for (std::size_t i = 0; i < d.crossings_.size(); ++i) {
    if (i != crossing) out.crossings_.push_back(d.crossings_[i]);
  }
  out.free_loops_ = d.free_loops_;
  std::array<ArcId, 2> dropped{};
  std::size_t dropped_count = 0;
  for (std::size_t i = 0; i < joins.size(); ++i) {
    const auto [keep, merge] = joins[i];
    if (keep == merge) {
      out.free_loops_.push_back(d.color_of(keep));
      dropped[dropped_count++] = keep;
      continue;
    }
    for (auto& c : out.crossings_) {
      for (ArcId& arc : c.slots) {
        if (arc == merge) arc = keep;
      }
    }
    for (std::size_t j = i + 1; j < joins.size(); ++j) {
      if (joins[j].first == merge) joins[j].first = keep;
      if (joins[j].second == merge) joins[j].second = keep;
    }
    dropped[dropped_count++] = merge;
  }
  out.arc_colors_.reserve(d.arc_colors_.size());
  for (const auto& entry : d.arc_colors_) {
    bool gone = false;
    for (std::size_t i = 0; i < dropped_count; ++i) gone = gone || entry.first == dropped[i];
    if (!gone) out.arc_colors_.push_back(entry);
  }
  std::sort(out.free_loops_.begin(), out.free_loops_.end());
  return out;
}

namespace {

std::array<std::pair<ArcId, ArcId>, 2> bar0_joins(const CrossingRecord& c) {
  return {{{c.slots[0], c.slots[3]}, {c.slots[1], c.slots[2]}}};
}

std::array<std::pair<ArcId, ArcId>, 2> bar1_joins(const CrossingRecord& c) {
  return {{{c.slots[0], c.slots[1]}, {c.slots[2], c.slots[3]}}};
}

}  // namespace

TiedDiagram smooth_type1(const TiedDiagram& d, std::size_t crossing, SameColorSmoothing kind) {
  if (classify(d, crossing) != CrossingClass::IllegalType1) {
    throw DiagramError(DiagramErrorKind::WrongClass, "crossing is not a same-color crossing");
  }
  const auto& c = d.crossings()[crossing];
  return reconnect(d, crossing, kind == SameColorSmoothing::Bar0 ? bar0_joins(c) : bar1_joins(c));
}

TiedDiagram smooth_type2(const TiedDiagram& d, std::size_t crossing, MixedSmoothing kind) {
  if (classify(d, crossing) != CrossingClass::IllegalType2) {
    throw DiagramError(DiagramErrorKind::WrongClass, "crossing is not an illegal type-2 crossing");
  }
  const auto& c = d.crossings()[crossing];
  if (kind == MixedSmoothing::Two) {
    std::vector<CrossingRecord> crossings = d.crossings();
    const auto s = c.slots;
    crossings[crossing].slots = {s[1], s[2], s[3], s[0]};
    return TiedDiagram(std::move(crossings), d.arc_colors(), d.free_loops());
  }
  const Color lower = d.color_of(c.slots[1]);
  const Color upper = d.color_of(c.slots[0]);
  TiedDiagram joined =
      reconnect(d, crossing, kind == MixedSmoothing::Zero ? bar0_joins(c) : bar1_joins(c));
  return joined.recolored([=](Color col) { return col == upper ? lower : col; }).normalized();
}

TiedDiagram disjoint_union(const TiedDiagram& d1, const TiedDiagram& d2, bool share_colors,
                           const std::map<Color, Color>& color_map) {
  const auto colors1 = distinct_colors(d1);
  const auto colors2 = distinct_colors(d2);
  const Color top = colors1.empty() ? 0 : colors1.back();

  std::map<Color, Color> mapping;
  if (share_colors) {
    for (const auto& [from, to] : color_map) {
      if (!std::binary_search(colors2.begin(), colors2.end(), from) ||
          !std::binary_search(colors1.begin(), colors1.end(), to)) {
        throw DiagramError(DiagramErrorKind::InvalidColorMap,
                           "color map entry " + std::to_string(from) + "->" + std::to_string(to) +
                               " does not identify colors of the two diagrams");
      }
      mapping[from] = to;
    }
    Color next = top;
    for (Color c : colors2) {
      if (!mapping.contains(c)) mapping[c] = ++next;
    }
  } else {
    for (Color c : colors2) mapping[c] = top + c;
  }

  ArcId arc_offset = 0;
  for (const auto& c : d1.crossings()) {
    for (ArcId arc : c.slots) arc_offset = std::max(arc_offset, arc + 1);
  }
  for (const auto& [arc, color] : d1.arc_colors()) arc_offset = std::max(arc_offset, arc + 1);

  std::vector<CrossingRecord> crossings = d1.crossings();
  const auto origin_offset = static_cast<std::uint32_t>(d1.crossing_count());
  for (auto c : d2.crossings()) {
    for (ArcId& arc : c.slots) arc += arc_offset;
    c.origin += origin_offset;
    crossings.push_back(c);
  }
  TiedDiagram::ArcColors arc_colors = d1.arc_colors();
  for (const auto& [arc, color] : d2.arc_colors()) {
    arc_colors.emplace_back(arc + arc_offset, mapping.at(color));
  }
  std::vector<Color> loops = d1.free_loops();
  for (Color c : d2.free_loops()) loops.push_back(mapping.at(c));
  return TiedDiagram(std::move(crossings), std::move(arc_colors), std::move(loops)).normalized();
}

namespace {

struct Dart {
  std::size_t crossing;
  int slot;
};

// Breadth-first relabeling from one start crossing and rotation.  A
// crossing's rotation (0 or 2) is fixed by the slot through which it is first
// entered, so isomorphic diagrams give identical traces.
std::vector<int> trace_from(const TiedDiagram& d, const std::vector<std::array<Dart, 4>>& partner,
                            std::size_t start, int start_rotation) {
  const std::size_t n = d.crossing_count();
  std::vector<int> order(n, -1);
  std::vector<int> rotation(n, 0);
  std::vector<std::size_t> queue{start};
  order[start] = 0;
  rotation[start] = start_rotation;
  std::vector<int> out;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t c = queue[head];
    for (int local = 0; local < 4; ++local) {
      const int slot = (local + rotation[c]) % 4;
      const Dart next = partner[c][slot];
      if (order[next.crossing] < 0) {
        order[next.crossing] = static_cast<int>(queue.size());
        rotation[next.crossing] = next.slot < 2 ? 0 : 2;
        queue.push_back(next.crossing);
      }
      out.push_back(order[next.crossing]);
      out.push_back((next.slot - rotation[next.crossing] + 4) % 4);
      out.push_back(d.color_of(d.crossings()[c].slots[slot]));
    }
  }
  return out;
}

}  // namespace

std::string canonical_code(const TiedDiagram& input) {
  const TiedDiagram d = input.normalized();
  const std::size_t n = d.crossing_count();

  std::map<ArcId, std::vector<Dart>> ends;
  for (std::size_t i = 0; i < n; ++i) {
    for (int s = 0; s < 4; ++s) ends[d.crossings()[i].slots[s]].push_back(Dart{i, s});
  }
  std::vector<std::array<Dart, 4>> partner(n);
  DisjointSets pieces(n);
  for (const auto& [arc, darts] : ends) {
    if (darts.size() != 2) {
      throw DiagramError(DiagramErrorKind::DanglingArc, "arc " + std::to_string(arc) + " is dangling");
    }
    partner[darts[0].crossing][darts[0].slot] = darts[1];
    partner[darts[1].crossing][darts[1].slot] = darts[0];
    pieces.unite(darts[0].crossing, darts[1].crossing);
  }

  std::map<std::size_t, std::vector<int>> best_by_piece;
  for (std::size_t start = 0; start < n; ++start) {
    for (int rotation : {0, 2}) {
      auto trace = trace_from(d, partner, start, rotation);
      auto& best = best_by_piece[pieces.find(start)];
      if (best.empty() || trace < best) best = std::move(trace);
    }
  }

  std::vector<std::string> parts;
  for (const auto& [root, trace] : best_by_piece) {
    std::ostringstream piece;
    piece << 'P';
    for (std::size_t i = 0; i < trace.size(); i += 3) {
      piece << (i % 12 == 0 ? ':' : ',') << trace[i] << '.' << trace[i + 1] << '.' << trace[i + 2];
    }
    parts.push_back(piece.str());
  }
  std::sort(parts.begin(), parts.end());
  std::ostringstream code;
  for (const auto& part : parts) code << part << ';';
  code << 'O';
  for (Color c : d.free_loops()) code << ':' << c;
  return code.str();
}

}  // namespace tiedbracket
