#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tiedbracket/catalog.hpp"
#include "tiedbracket/check/naive_expander.hpp"
#include "tiedbracket/diagram.hpp"
#include "tiedbracket/io.hpp"

namespace tiedbracket::testing {

inline TiedDiagram fixture(const std::string& name) {
  const FixtureEntry* e = find_fixture(load_catalog(), name);
  if (e == nullptr) throw std::runtime_error("no fixture " + name);
  return e->diagram();
}

inline TiedDiagram hopf(Color first, Color second) {
  return TiedDiagram::from_component_colors({{1, 3, 2, 4}, {3, 1, 4, 2}}, {first, second}, {});
}

inline TiedDiagram kink() { return parse_diagram("pd: X[1,1,2,2]"); }

/// Same diagram with arcs renamed by a random injection and crossings shuffled.
inline TiedDiagram scrambled(const TiedDiagram& d, std::mt19937_64& rng) {
  std::vector<ArcId> used;
  for (const auto& c : d.crossings()) used.insert(used.end(), c.slots.begin(), c.slots.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<ArcId> fresh(used.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) fresh[i] = static_cast<ArcId>(100 + 3 * i);
  std::shuffle(fresh.begin(), fresh.end(), rng);
  std::map<ArcId, ArcId> rename;
  for (std::size_t i = 0; i < used.size(); ++i) rename[used[i]] = fresh[i];

  std::vector<CrossingRecord> crossings = d.crossings();
  for (auto& c : crossings) {
    for (ArcId& a : c.slots) a = rename.at(a);
  }
  std::shuffle(crossings.begin(), crossings.end(), rng);
  TiedDiagram::ArcColors colors;
  for (const auto& [arc, color] : d.arc_colors()) {
    if (rename.contains(arc)) colors.emplace_back(rename.at(arc), color);
  }
  return TiedDiagram(std::move(crossings), std::move(colors), d.free_loops());
}

inline check::RawDiagram to_raw(const TiedDiagram& d) {
  check::RawDiagram raw;
  for (const auto& c : d.crossings()) raw.crossings.push_back(c.slots);
  for (const auto& [arc, color] : d.arc_colors()) raw.arc_color[arc] = color;
  raw.loops = d.free_loops();
  return raw;
}

}  // namespace tiedbracket::testing
