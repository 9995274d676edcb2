#pragma once

#include <cstddef>
#include <ostream>

#include "tiedbracket/diagram.hpp"
#include "tiedbracket/engine.hpp"

namespace tiedbracket {

struct DotStats {
  std::size_t nodes = 0;
  bool truncated = false;
};

/// Writes the resolution tree as a DOT digraph.  Nodes show complexity and
/// the smoothing path from the root (root crossing index and move), leaves
/// also (k, gamma).  Edges carry branch labels.  Past max_nodes the output
/// stops with a visible truncation notice.
DotStats write_tree_dot(std::ostream& out, const TiedDiagram& d, Strategy& strategy,
                        std::size_t max_nodes = 5000);

}  // namespace tiedbracket
