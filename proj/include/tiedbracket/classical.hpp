// Classical Kauffman bracket state sum, orientations, writhe and the tied
// Jones normalization.
#pragma once

#include <stdexcept>
#include <vector>

#include "tiedbracket/diagram.hpp"
#include "tiedbracket/laurent.hpp"

namespace tiedbracket {

class MultiColorInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sum over all 2^n smoothing assignments of A^(n-2r) (-A^2-A^-2)^(k-1).
/// Free loops count as circles.  Throws MultiColorInput for more than one
/// color.
Laurent kauffman_bracket(const TiedDiagram& d);

/// One flag per crossing component, in components() order.  false keeps the
/// forward direction: the one in which under-passages run from slot 0 to
/// slot 2.
struct Orientation {
  std::vector<bool> reversed;

  static Orientation forward(const TiedDiagram& d);
  /// Per-component +1 (forward) / -1 (reversed).
  static Orientation from_signs(const TiedDiagram& d, const std::vector<int>& signs);
};

/// Throws std::invalid_argument if the orientation has the wrong length.
int writhe(const TiedDiagram& d, const Orientation& o);

/// Sign of each crossing, in stored order.
std::vector<int> crossing_signs(const TiedDiagram& d, const Orientation& o);

/// (-A)^(-3w) times the double bracket.
Laurent tied_jones(const TiedDiagram& d, const Orientation& o);

/// (-A)^(-3w) as a polynomial.
Laurent writhe_factor(int w);

}  // namespace tiedbracket
