#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "tiedbracket/laurent.hpp"

namespace tiedbracket::check {

/// Plain-data diagram for the naive expander.  Deliberately shares nothing
/// with TiedDiagram beyond the slot convention.
struct RawDiagram {
  std::vector<std::array<std::uint32_t, 4>> crossings;
  std::map<std::uint32_t, int> arc_color;
  std::vector<int> loops;
};

/// Recursive skein expansion straight from the local relations: smooths the
/// first illegal crossing it finds and recurses, evaluating crossing-free or
/// all-legal diagrams from their component and color counts.
Laurent naive_bracket(const RawDiagram& d);

}  // namespace tiedbracket::check
