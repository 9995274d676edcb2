#include "tiedbracket/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace tiedbracket {

Laurent branch_label(Move move) {
  switch (move) {
    case Move::Bar0: return Laurent::A();
    case Move::Bar1: return Laurent::A_inv();
    case Move::Two: return Laurent(-1);
    case Move::Zero:
    case Move::One: return Laurent::delta();
  }
  return {};
}

std::string label_text(Move move) {
  switch (move) {
    case Move::Bar0: return "A";
    case Move::Bar1: return "A^-1";
    case Move::Two: return "-1";
    case Move::Zero:
    case Move::One: return "delta";
  }
  return "?";
}

const char* to_string(Move move) {
  switch (move) {
    case Move::Bar0: return "bar0";
    case Move::Bar1: return "bar1";
    case Move::Two: return "two";
    case Move::Zero: return "zero";
    case Move::One: return "one";
  }
  return "?";
}

PathWeight PathWeight::times(Move move) const {
  PathWeight out = *this;
  switch (move) {
    case Move::Bar0: ++out.a_shift; break;
    case Move::Bar1: --out.a_shift; break;
    case Move::Two: out.sign = -out.sign; break;
    case Move::Zero:
    case Move::One: ++out.delta_power; break;
  }
  return out;
}

Laurent PathWeight::value() const {
  return (pow(Laurent::delta(), delta_power) * Laurent(sign)).shifted(a_shift);
}

Laurent state_value(std::size_t components, std::size_t colors) {
  if (colors == 0 || colors > components) {
    throw std::invalid_argument("AJ-state needs 1 <= colors <= components");
  }
  return pow(Laurent::c(), static_cast<unsigned>(colors - 1)) *
         pow(Laurent::loop_value(), static_cast<unsigned>(components - colors));
}

Laurent state_value(const AJStateSummary& s) { return state_value(s.components, s.colors); }

AJStateSummary summarize(const TiedDiagram& leaf, bool with_code) {
  AJStateSummary s;
  s.components = component_count(leaf);
  s.colors = leaf.color_count();
  s.crossings_left = leaf.crossing_count();
  if (with_code) s.code = canonical_code(leaf);
  return s;
}

Laurent StateSum::evaluate() const {
  Laurent total;
  for (const auto& e : entries) total += e.weight * state_value(e.summary);
  return total;
}

StateSum StateSum::merged_by_code() const {
  StateSum out;
  std::map<std::string, std::size_t> slot;
  for (const auto& e : entries) {
    if (!e.summary.code) {
      out.entries.push_back(e);
      continue;
    }
    auto [it, fresh] = slot.emplace(*e.summary.code, out.entries.size());
    if (fresh) {
      out.entries.push_back(e);
    } else {
      out.entries[it->second].weight += e.weight;
    }
  }
  std::erase_if(out.entries, [](const StateEntry& e) { return e.weight.is_zero(); });
  return out;
}

std::optional<std::size_t> DefaultStrategy::choose(const TiedDiagram& d) {
  std::optional<std::size_t> first_type1;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const CrossingClass cls = classify(d, i);
    if (cls == CrossingClass::IllegalType2) return i;
    if (cls == CrossingClass::IllegalType1 && !first_type1) first_type1 = i;
  }
  return first_type1;
}

PriorityStrategy::PriorityStrategy(std::vector<std::uint32_t> origin_order) {
  for (std::size_t r = 0; r < origin_order.size(); ++r) {
    const std::uint32_t origin = origin_order[r];
    if (origin >= rank_.size()) rank_.resize(origin + 1, SIZE_MAX);
    rank_[origin] = r;
  }
}

std::optional<std::size_t> PriorityStrategy::choose(const TiedDiagram& d) {
  std::optional<std::size_t> best;
  std::size_t best_rank = SIZE_MAX;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    if (classify(d, i) == CrossingClass::Legal) continue;
    const std::uint32_t origin = d.crossings()[i].origin;
    const std::size_t rank = origin < rank_.size() ? rank_[origin] : SIZE_MAX;
    if (!best || rank < best_rank) {
      best = i;
      best_rank = rank;
    }
  }
  return best;
}

std::optional<std::size_t> RandomStrategy::choose(const TiedDiagram& d) {
  std::vector<std::size_t> illegal;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    if (classify(d, i) != CrossingClass::Legal) illegal.push_back(i);
  }
  if (illegal.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, illegal.size() - 1);
  return illegal[pick(rng_)];
}

namespace {

struct Child {
  Move move;
  TiedDiagram diagram;
};

std::vector<Child> expand(const TiedDiagram& d, std::size_t crossing) {
  std::vector<Child> children;
  if (classify(d, crossing) == CrossingClass::IllegalType1) {
    children.push_back({Move::Bar0, smooth_type1(d, crossing, SameColorSmoothing::Bar0)});
    children.push_back({Move::Bar1, smooth_type1(d, crossing, SameColorSmoothing::Bar1)});
  } else {
    children.push_back({Move::Two, smooth_type2(d, crossing, MixedSmoothing::Two)});
    children.push_back({Move::Zero, smooth_type2(d, crossing, MixedSmoothing::Zero)});
    children.push_back({Move::One, smooth_type2(d, crossing, MixedSmoothing::One)});
  }
  return children;
}

class Walker {
 public:
  Walker(Strategy& strategy, const std::function<bool(const TreeNode&)>& visit)
      : strategy_(strategy), visit_(visit) {}

  // Returns false once the visitor asked to stop.
  bool run(const TiedDiagram& d, TreeNode node) {
    node.id = next_id_++;
    node.diagram = &d;
    node.complexity = complexity(d);
    const auto choice = strategy_.choose(d);
    node.leaf = !choice.has_value();
    if (!visit_(node)) return false;
    if (node.leaf) return true;
    const std::uint32_t origin = d.crossings()[*choice].origin;
    for (auto& child : expand(d, *choice)) {
      TreeNode next;
      next.parent = node.id;
      next.depth = node.depth + 1;
      next.weight = node.weight.times(child.move);
      next.via = child.move;
      next.via_origin = origin;
      if (!(complexity(child.diagram) < node.complexity)) {
        throw std::logic_error("smoothing did not lower the complexity");
      }
      if (!run(child.diagram, next)) return false;
    }
    return true;
  }

 private:
  Strategy& strategy_;
  const std::function<bool(const TreeNode&)>& visit_;
  std::size_t next_id_ = 0;
};

// Leaf tally keyed by (k, gamma, A-shift, delta power); the sign folds into
// the count.
using TallyKey = std::tuple<std::size_t, std::size_t, int, unsigned>;

Laurent evaluate_tally(const std::map<TallyKey, Integer>& tally) {
  std::map<unsigned, Laurent> delta_powers;
  std::map<std::pair<std::size_t, std::size_t>, Laurent> state_values;
  Laurent total;
  // Group by (k, gamma, delta power) so each product is formed once.
  std::map<std::tuple<std::size_t, std::size_t, unsigned>, std::vector<Term>> groups;
  for (const auto& [key, count] : tally) {
    if (count == 0) continue;
    const auto& [k, gamma, shift, dpow] = key;
    groups[{k, gamma, dpow}].push_back(Term{shift, 0, count});
  }
  for (auto& [key, terms] : groups) {
    const auto& [k, gamma, dpow] = key;
    auto dit = delta_powers.find(dpow);
    if (dit == delta_powers.end()) dit = delta_powers.emplace(dpow, pow(Laurent::delta(), dpow)).first;
    auto sit = state_values.find({k, gamma});
    if (sit == state_values.end()) sit = state_values.emplace(std::pair{k, gamma}, state_value(k, gamma)).first;
    total += Laurent::from_terms(std::move(terms)) * dit->second * sit->second;
  }
  return total;
}

}  // namespace

void walk_tree(const TiedDiagram& d, Strategy& strategy,
               const std::function<bool(const TreeNode&)>& visit) {
  Walker(strategy, visit).run(d, TreeNode{});
}

StateSum resolve(const TiedDiagram& d, Strategy& strategy, ResolveOptions options) {
  validate(d);
  StateSum sum;
  walk_tree(d, strategy, [&](const TreeNode& node) {
    if (node.leaf) {
      sum.entries.push_back(StateEntry{summarize(*node.diagram, options.with_codes),
                                       node.weight.value()});
    }
    return true;
  });
  return sum;
}

Laurent aj_bracket(const TiedDiagram& d, Strategy& strategy) {
  validate(d);
  std::map<TallyKey, Integer> tally;
  walk_tree(d, strategy, [&](const TreeNode& node) {
    if (node.leaf) {
      const TiedDiagram& leaf = *node.diagram;
      tally[{component_count(leaf), leaf.color_count(), node.weight.a_shift,
             node.weight.delta_power}] += node.weight.sign;
    }
    return true;
  });
  return evaluate_tally(tally);
}

Laurent aj_bracket(const TiedDiagram& d) {
  DefaultStrategy strategy;
  return aj_bracket(d, strategy);
}

bool independence_check(const TiedDiagram& d, std::size_t trials, std::uint64_t seed) {
  const Laurent reference = aj_bracket(d);
  std::mt19937_64 seeds(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    RandomStrategy strategy(seeds());
    if (aj_bracket(d, strategy) != reference) return false;
  }
  return true;
}

}  // namespace tiedbracket
