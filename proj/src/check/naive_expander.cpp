#include "tiedbracket/check/naive_expander.hpp"

#include <set>

namespace tiedbracket::check {

namespace {

using Pair = std::array<std::uint32_t, 2>;

RawDiagram drop_and_join(const RawDiagram& d, std::size_t x, std::array<Pair, 2> joins) {
  RawDiagram out;
  out.loops = d.loops;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    if (i != x) out.crossings.push_back(d.crossings[i]);
  }
  for (std::size_t p = 0; p < 2; ++p) {
    const auto [keep, gone] = joins[p];
    if (keep == gone) {
      out.loops.push_back(d.arc_color.at(keep));
      continue;
    }
    for (auto& c : out.crossings) {
      for (auto& a : c) a = a == gone ? keep : a;
    }
    for (std::size_t q = p + 1; q < 2; ++q) {
      for (auto& a : joins[q]) a = a == gone ? keep : a;
    }
  }
  for (const auto& c : out.crossings) {
    for (auto a : c) out.arc_color[a] = d.arc_color.at(a);
  }
  return out;
}

void merge_color(RawDiagram& d, int from, int into) {
  for (auto& [arc, color] : d.arc_color) color = color == from ? into : color;
  for (int& c : d.loops) c = c == from ? into : c;
}

Laurent leaf_value(const RawDiagram& d) {
  std::map<std::uint32_t, std::uint32_t> parent;
  for (const auto& [arc, color] : d.arc_color) parent[arc] = arc;
  auto root = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a];
    return a;
  };
  for (const auto& c : d.crossings) {
    parent[root(c[0])] = root(c[2]);
    parent[root(c[1])] = root(c[3]);
  }
  std::set<std::uint32_t> roots;
  for (const auto& [arc, color] : d.arc_color) roots.insert(root(arc));
  std::set<int> colors(d.loops.begin(), d.loops.end());
  for (const auto& [arc, color] : d.arc_color) colors.insert(color);
  const auto k = static_cast<unsigned>(roots.size() + d.loops.size());
  const auto g = static_cast<unsigned>(colors.size());
  return pow(Laurent::c(), g - 1) * pow(Laurent::loop_value(), k - g);
}

}  // namespace

Laurent naive_bracket(const RawDiagram& d) {
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    const auto s = d.crossings[x];
    const int over = d.arc_color.at(s[1]);
    const int under = d.arc_color.at(s[0]);
    const std::array<Pair, 2> d0{Pair{s[0], s[3]}, Pair{s[1], s[2]}};
    const std::array<Pair, 2> dinf{Pair{s[0], s[1]}, Pair{s[2], s[3]}};
    if (over == under) {
      return Laurent::A() * naive_bracket(drop_and_join(d, x, d0)) +
             Laurent::A_inv() * naive_bracket(drop_and_join(d, x, dinf));
    }
    if (over < under) {
      RawDiagram switched = d;
      switched.crossings[x] = {s[1], s[2], s[3], s[0]};
      RawDiagram zero = drop_and_join(d, x, d0);
      RawDiagram one = drop_and_join(d, x, dinf);
      merge_color(zero, under, over);
      merge_color(one, under, over);
      return -naive_bracket(switched) + Laurent::delta() * (naive_bracket(zero) + naive_bracket(one));
    }
  }
  return leaf_value(d);
}

}  // namespace tiedbracket::check
