#include "tiedbracket/check/random_diagram.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace tiedbracket::check {

namespace {

using Slots = std::array<ArcId, 4>;

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Braid read bottom to top.  A generator at positions (i, i+1) takes labels
// la (SW) and lb (SE) to na (NW) and nb (NE); counterclockwise order around
// the crossing is SW, SE, NE, NW.
void braid_closure(std::mt19937_64& rng, std::size_t strands, std::size_t letters,
                   std::vector<Slots>& crossings, std::size_t& untouched) {
  std::vector<ArcId> bottom(strands);
  for (std::size_t p = 0; p < strands; ++p) bottom[p] = static_cast<ArcId>(p);
  std::vector<ArcId> current = bottom;
  ArcId next = static_cast<ArcId>(strands);
  for (std::size_t n = 0; n < letters; ++n) {
    const std::size_t i = uniform(rng, 0, strands - 2);
    const ArcId la = current[i];
    const ArcId lb = current[i + 1];
    const ArcId na = next++;
    const ArcId nb = next++;
    if (uniform(rng, 0, 1) == 0) {
      crossings.push_back({la, lb, nb, na});  // SW-NE strand under
    } else {
      crossings.push_back({lb, nb, na, la});  // SE-NW strand under
    }
    current[i] = na;
    current[i + 1] = nb;
  }
  std::map<ArcId, ArcId> close;
  untouched = 0;
  for (std::size_t p = 0; p < strands; ++p) {
    if (current[p] == bottom[p]) {
      ++untouched;
    } else {
      close[current[p]] = bottom[p];
    }
  }
  for (auto& c : crossings) {
    for (ArcId& a : c) {
      if (auto it = close.find(a); it != close.end()) a = it->second;
    }
  }
}

// Replaces one end of an arc by a one-crossing curl.
void add_curl(std::mt19937_64& rng, std::vector<Slots>& crossings, ArcId& next) {
  const std::size_t x = uniform(rng, 0, crossings.size() - 1);
  const std::size_t s = uniform(rng, 0, 3);
  const ArcId a = crossings[x][s];
  const ArcId loop = next++;
  const ArcId b = next++;
  crossings[x][s] = b;
  switch (uniform(rng, 0, 3)) {
    case 0: crossings.push_back({a, loop, loop, b}); break;
    case 1: crossings.push_back({a, b, loop, loop}); break;
    case 2: crossings.push_back({loop, loop, b, a}); break;
    default: crossings.push_back({loop, a, b, loop}); break;
  }
}

}  // namespace

TiedDiagram random_diagram(std::mt19937_64& rng, const RandomDiagramOptions& options) {
  std::vector<Slots> crossings;
  std::size_t loops = 0;
  const std::size_t strands = uniform(rng, 1, std::max<std::size_t>(1, options.max_strands));
  const std::size_t curls = std::min(options.max_curls, options.max_crossings);
  const std::size_t curl_count = uniform(rng, 0, curls);
  const std::size_t letters =
      strands < 2 ? 0 : uniform(rng, 0, options.max_crossings - curl_count);
  braid_closure(rng, strands, letters, crossings, loops);
  loops += uniform(rng, 0, options.max_free_loops);
  ArcId next = 0;
  for (const auto& c : crossings) {
    for (ArcId a : c) next = std::max(next, a + 1);
  }
  for (std::size_t k = 0; k < curl_count; ++k) {
    if (crossings.empty()) {
      if (loops == 0) break;
      --loops;
      crossings.push_back({next, next, next + 1, next + 1});
      next += 2;
    } else {
      add_curl(rng, crossings, next);
    }
  }
  if (crossings.empty() && loops == 0) loops = 1;

  std::vector<CrossingRecord> records;
  TiedDiagram::ArcColors ones;
  for (const auto& c : crossings) {
    records.push_back(CrossingRecord{c, 0});
    for (ArcId a : c) ones.emplace_back(a, 1);
  }
  const std::size_t linked = component_count(TiedDiagram(records, ones, {}));
  const int colors = static_cast<int>(uniform(rng, 1, static_cast<std::size_t>(std::max(1, options.max_colors))));
  auto pick = [&] { return static_cast<Color>(uniform(rng, 1, static_cast<std::size_t>(colors))); };
  std::vector<Color> component_colors(linked);
  for (Color& c : component_colors) c = pick();
  std::vector<Color> free_loops(loops);
  for (Color& c : free_loops) c = pick();
  return TiedDiagram::from_component_colors(std::move(crossings), component_colors, std::move(free_loops))
      .normalized();
}

}  // namespace tiedbracket::check
