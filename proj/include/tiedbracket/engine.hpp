// Resolution trees over illegal crossings and the double bracket.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tiedbracket/diagram.hpp"
#include "tiedbracket/laurent.hpp"

namespace tiedbracket {

/// The five smoothings a tree edge can carry.
enum class Move { Bar0, Bar1, Two, Zero, One };

/// A (Bar0), A^-1 (Bar1), -1 (Two), delta (Zero, One).
Laurent branch_label(Move move);
std::string label_text(Move move);
const char* to_string(Move move);

/// Compact product of branch labels: sign * A^a_shift * delta^delta_power.
struct PathWeight {
  int sign = 1;
  int a_shift = 0;
  unsigned delta_power = 0;

  PathWeight times(Move move) const;
  Laurent value() const;
  friend bool operator==(const PathWeight&, const PathWeight&) = default;
};

struct AJStateSummary {
  std::size_t components = 0;  // k
  std::size_t colors = 0;      // gamma
  std::optional<std::string> code;
  std::size_t crossings_left = 0;
};

/// c^(colors-1) * (-A^2-A^-2)^(components-colors).
Laurent state_value(std::size_t components, std::size_t colors);
Laurent state_value(const AJStateSummary& s);

AJStateSummary summarize(const TiedDiagram& leaf, bool with_code);

struct StateEntry {
  AJStateSummary summary;
  Laurent weight;
};

struct StateSum {
  std::vector<StateEntry> entries;

  /// Sum of weight * state_value over all entries.
  Laurent evaluate() const;
  /// One entry per canonical code, weights added.  Entries without a code
  /// are kept as they are.
  StateSum merged_by_code() const;
};

/// Picks the crossing to smooth at a tree node, or nothing at an AJ-state.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::optional<std::size_t> choose(const TiedDiagram& d) = 0;
};

/// First type-2 crossing in stored order, else first type-1 crossing.
class DefaultStrategy final : public Strategy {
 public:
  std::optional<std::size_t> choose(const TiedDiagram& d) override;
};

/// Illegal crossing whose origin comes first in a fixed ranking of the root
/// crossings.
class PriorityStrategy final : public Strategy {
 public:
  explicit PriorityStrategy(std::vector<std::uint32_t> origin_order);
  std::optional<std::size_t> choose(const TiedDiagram& d) override;

 private:
  std::vector<std::size_t> rank_;
};

/// Uniform choice among the illegal crossings of each node.
class RandomStrategy final : public Strategy {
 public:
  explicit RandomStrategy(std::uint64_t seed) : rng_(seed) {}
  std::optional<std::size_t> choose(const TiedDiagram& d) override;

 private:
  std::mt19937_64 rng_;
};

/// Snapshot of one tree node handed to a visitor.
struct TreeNode {
  std::size_t id = 0;
  std::optional<std::size_t> parent;
  std::size_t depth = 0;
  const TiedDiagram* diagram = nullptr;
  Complexity complexity;
  PathWeight weight;
  /// Smoothing on the edge from the parent, with the root crossing it acted on.
  std::optional<Move> via;
  std::uint32_t via_origin = 0;
  bool leaf = false;
};

/// Depth-first walk.  Children are visited in label order (Bar0, Bar1) or
/// (Two, Zero, One).  Returning false from the visitor stops the walk.
/// Throws std::logic_error if a child's complexity does not drop below its
/// parent's.
void walk_tree(const TiedDiagram& d, Strategy& strategy,
               const std::function<bool(const TreeNode&)>& visit);

struct ResolveOptions {
  bool with_codes = false;
};

/// One entry per leaf.  Validates d first.
StateSum resolve(const TiedDiagram& d, Strategy& strategy, ResolveOptions options = {});

/// The double bracket via the default strategy.
Laurent aj_bracket(const TiedDiagram& d);
/// Same value through an arbitrary strategy, without materializing entries.
Laurent aj_bracket(const TiedDiagram& d, Strategy& strategy);

/// True iff every seeded random strategy reproduces the default value.
bool independence_check(const TiedDiagram& d, std::size_t trials, std::uint64_t seed);

}  // namespace tiedbracket
