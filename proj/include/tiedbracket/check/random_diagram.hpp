// Random planar tied diagrams for property tests: closures of random braid
// words, optionally decorated with curls and free loops.
#pragma once

#include <cstddef>
#include <random>

#include "tiedbracket/diagram.hpp"

namespace tiedbracket::check {

struct RandomDiagramOptions {
  std::size_t max_crossings = 8;
  int max_colors = 3;
  std::size_t max_strands = 4;
  std::size_t max_curls = 2;
  std::size_t max_free_loops = 1;
};

/// Valid, normalized, with at most max_crossings crossings (curls included)
/// and at most max_colors colors.
TiedDiagram random_diagram(std::mt19937_64& rng, const RandomDiagramOptions& options = {});

}  // namespace tiedbracket::check
