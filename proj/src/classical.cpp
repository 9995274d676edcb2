#include "tiedbracket/classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tiedbracket/engine.hpp"

namespace tiedbracket {

Laurent kauffman_bracket(const TiedDiagram& d) {
  validate(d);
  if (d.color_count() > 1) {
    throw MultiColorInput("the Kauffman bracket needs a single-colored diagram");
  }
  const auto& crossings = d.crossings();
  const std::size_t n = crossings.size();
  if (n >= 8 * sizeof(unsigned long long) - 1) {
    throw std::invalid_argument("too many crossings for a full state sum");
  }

  std::vector<ArcId> arcs;
  for (const auto& c : crossings) arcs.insert(arcs.end(), c.slots.begin(), c.slots.end());
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  std::vector<std::array<std::size_t, 4>> local(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int s = 0; s < 4; ++s) {
      local[i][s] = static_cast<std::size_t>(
          std::lower_bound(arcs.begin(), arcs.end(), crossings[i].slots[s]) - arcs.begin());
    }
  }

  // (A exponent, circle count) -> number of states
  std::map<std::pair<int, std::size_t>, Integer> tally;
  std::vector<std::size_t> parent(arcs.size());
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::size_t circles = arcs.size();
    int a_exp = 0;
    auto join = [&](std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x != y) {
        parent[x] = y;
        --circles;
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = local[i];
      if ((mask >> i) & 1ULL) {
        join(s[0], s[1]);
        join(s[2], s[3]);
        --a_exp;
      } else {
        join(s[0], s[3]);
        join(s[1], s[2]);
        ++a_exp;
      }
    }
    tally[{a_exp, circles + d.free_loops().size()}] += 1;
  }

  Laurent total;
  const Laurent loop = Laurent::loop_value();
  for (const auto& [key, count] : tally) {
    total += Laurent::monomial(count, key.first) * pow(loop, static_cast<unsigned>(key.second - 1));
  }
  return total;
}

namespace {

struct Dart {
  std::size_t crossing;
  int slot;
  friend bool operator==(const Dart&, const Dart&) = default;
};

using DartMap = std::map<ArcId, std::vector<Dart>>;

DartMap dart_map(const TiedDiagram& d) {
  DartMap ends;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    for (int s = 0; s < 4; ++s) ends[d.crossings()[i].slots[s]].push_back(Dart{i, s});
  }
  return ends;
}

// Crossing entries met walking a component, starting by entering `first`.
std::vector<Dart> trace(const TiedDiagram& d, const DartMap& ends, Dart first) {
  std::vector<Dart> entries;
  Dart at = first;
  do {
    entries.push_back(at);
    const Dart exit{at.crossing, (at.slot + 2) % 4};
    const auto& pair = ends.at(d.crossings()[exit.crossing].slots[exit.slot]);
    at = pair[0] == exit ? pair[1] : pair[0];
  } while (!(at == first));
  return entries;
}

// Entries of each component walked in its forward direction.
std::vector<std::vector<Dart>> forward_walks(const TiedDiagram& d) {
  const DartMap ends = dart_map(d);
  std::vector<std::vector<Dart>> walks;
  for (const auto& comp : components(d)) {
    if (comp.free_loop) continue;
    const auto& pair = ends.at(comp.arcs.front());
    const Dart toward = std::min(pair[0], pair[1], [](const Dart& x, const Dart& y) {
      return std::pair{x.crossing, x.slot} < std::pair{y.crossing, y.slot};
    });
    auto walk = trace(d, ends, toward);
    auto under = std::find_if(walk.begin(), walk.end(), [](const Dart& e) { return e.slot % 2 == 0; });
    if (under != walk.end() && under->slot == 2) {
      for (auto& e : walk) e.slot = (e.slot + 2) % 4;
      std::reverse(walk.begin(), walk.end());
    }
    walks.push_back(std::move(walk));
  }
  return walks;
}

}  // namespace

Orientation Orientation::forward(const TiedDiagram& d) {
  std::size_t count = 0;
  for (const auto& comp : components(d)) count += comp.free_loop ? 0 : 1;
  return Orientation{std::vector<bool>(count, false)};
}

Orientation Orientation::from_signs(const TiedDiagram& d, const std::vector<int>& signs) {
  Orientation o = forward(d);
  if (signs.size() != o.reversed.size()) {
    throw std::invalid_argument("expected " + std::to_string(o.reversed.size()) +
                                " orientation signs, got " + std::to_string(signs.size()));
  }
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw std::invalid_argument("orientation signs must be +1 or -1");
    o.reversed[i] = signs[i] < 0;
  }
  return o;
}

std::vector<int> crossing_signs(const TiedDiagram& d, const Orientation& o) {
  const auto walks = forward_walks(d);
  if (o.reversed.size() != walks.size()) {
    throw std::invalid_argument("orientation has " + std::to_string(o.reversed.size()) +
                                " flags for " + std::to_string(walks.size()) + " components");
  }
  std::vector<int> under_entry(d.crossing_count(), -1);
  std::vector<int> over_entry(d.crossing_count(), -1);
  for (std::size_t i = 0; i < walks.size(); ++i) {
    for (const Dart& e : walks[i]) {
      const int slot = o.reversed[i] ? (e.slot + 2) % 4 : e.slot;
      (slot % 2 == 0 ? under_entry : over_entry)[e.crossing] = slot;
    }
  }
  std::vector<int> signs(d.crossing_count());
  for (std::size_t x = 0; x < signs.size(); ++x) {
    signs[x] = over_entry[x] == (under_entry[x] + 1) % 4 ? 1 : -1;
  }
  return signs;
}

int writhe(const TiedDiagram& d, const Orientation& o) {
  const auto signs = crossing_signs(d, o);
  return std::accumulate(signs.begin(), signs.end(), 0);
}

Laurent writhe_factor(int w) {
  return Laurent::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
}

Laurent tied_jones(const TiedDiagram& d, const Orientation& o) {
  return writhe_factor(writhe(d, o)) * aj_bracket(d);
}

}  // namespace tiedbracket
