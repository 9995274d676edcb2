#include "tiedbracket/engine.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"
#include "tiedbracket/check/naive_expander.hpp"
#include "tiedbracket/check/random_diagram.hpp"
#include "tiedbracket/classical.hpp"
#include "tiedbracket/dot.hpp"

namespace tiedbracket {
namespace {

using testing::fixture;
using testing::hopf;

Laurent P(const char* text) { return parse_poly(text); }

TEST(StateValueTest, Formula) {
  EXPECT_EQ(state_value(1, 1), Laurent(1));
  EXPECT_EQ(state_value(2, 2), Laurent::c());
  EXPECT_EQ(state_value(3, 2), P("-A^2*c - A^-2*c"));
  EXPECT_EQ(state_value(AJStateSummary{4, 1, std::nullopt, 0}), pow(Laurent::loop_value(), 3));
  EXPECT_THROW(state_value(1, 2), std::invalid_argument);
  EXPECT_THROW(state_value(1, 0), std::invalid_argument);
}

TEST(PathWeightTest, TracksLabels) {
  PathWeight w;
  w = w.times(Move::Two).times(Move::Zero).times(Move::Bar1).times(Move::Bar1);
  EXPECT_EQ(w.value(), Laurent(-1) * Laurent::delta() * P("A^-2"));
  EXPECT_EQ(branch_label(Move::One), Laurent::delta());
  EXPECT_EQ(branch_label(Move::Bar0), Laurent::A());
  EXPECT_EQ(branch_label(Move::Two), Laurent(-1));
}

TEST(ResolveTest, CrosslessDiagramIsOneLeaf) {
  DefaultStrategy strategy;
  const StateSum sum = resolve(TiedDiagram({}, {}, {1, 2, 2}), strategy);
  ASSERT_EQ(sum.entries.size(), 1u);
  EXPECT_EQ(sum.entries[0].weight, Laurent(1));
  EXPECT_EQ(sum.entries[0].summary.components, 3u);
  EXPECT_EQ(sum.entries[0].summary.colors, 2u);
}

TEST(ResolveTest, TiedHopfLeaves) {
  DefaultStrategy strategy;
  const StateSum sum = resolve(hopf(1, 2), strategy);
  using Leaf = std::tuple<std::string, std::size_t, std::size_t>;
  std::vector<Leaf> got;
  for (const auto& e : sum.entries) {
    got.emplace_back(render_poly(e.weight), e.summary.components, e.summary.colors);
  }
  const std::string dA = render_poly(Laurent::delta() * Laurent::A());
  const std::string dAi = render_poly(Laurent::delta() * Laurent::A_inv());
  std::vector<Leaf> expected = {{"-1", 2, 2}, {dA, 1, 1}, {dAi, 2, 1}, {dA, 2, 1}, {dAi, 1, 1}};
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(sum.evaluate(), P("-c - A^4 - A^2 - A^-2 - A^-4"));
  for (const auto& e : sum.entries) {
    if (e.summary.colors == 2) EXPECT_EQ(e.summary.crossings_left, 2u);
  }
}

TEST(ResolveTest, MixedRootTree) {
  // Two switches lead to the mixed-color states; the four merge branches are classical.
  const TiedDiagram root = fixture("figure4root");
  DefaultStrategy strategy;
  std::vector<std::vector<Move>> path;
  std::vector<std::size_t> colors;
  std::size_t mixed_leaves = 0;
  std::size_t classical_roots = 0;
  walk_tree(root, strategy, [&](const TreeNode& n) {
    std::vector<Move> p = n.parent ? path[*n.parent] : std::vector<Move>{};
    if (n.via) p.push_back(*n.via);
    path.push_back(p);
    colors.push_back(n.diagram->color_count());
    if (n.parent && colors[n.id] == 1 && colors[*n.parent] > 1) ++classical_roots;
    if (n.leaf && colors[n.id] > 1) {
      ++mixed_leaves;
      EXPECT_EQ(n.complexity.illegal, 0u);
      EXPECT_GE(p.size(), 2u);
      if (p.size() >= 2) {
        EXPECT_EQ(p[0], Move::Two);
        EXPECT_EQ(p[1], Move::Two);
      }
    }
    return true;
  });
  EXPECT_EQ(mixed_leaves, 4u);
  EXPECT_EQ(classical_roots, 4u);
}

TEST(ResolveTest, MergingByCodePreservesTheSum) {
  DefaultStrategy strategy;
  const StateSum sum = resolve(fixture("figure4root"), strategy, {.with_codes = true});
  const StateSum merged = sum.merged_by_code();
  EXPECT_LT(merged.entries.size(), sum.entries.size());
  EXPECT_EQ(merged.evaluate(), sum.evaluate());
  EXPECT_EQ(sum.evaluate(), aj_bracket(fixture("figure4root")));
}

TEST(ResolveTest, WalkStopsWhenAsked) {
  DefaultStrategy strategy;
  std::size_t seen = 0;
  walk_tree(fixture("trefoil"), strategy, [&](const TreeNode&) { return ++seen < 4; });
  EXPECT_EQ(seen, 4u);
}

TEST(BracketTest, SmallValues) {
  EXPECT_EQ(aj_bracket(TiedDiagram({}, {}, {1})), Laurent(1));
  EXPECT_EQ(aj_bracket(TiedDiagram({}, {}, {1, 2})), Laurent::c());
  EXPECT_EQ(aj_bracket(hopf(1, 2)), P("-c - A^4 - A^2 - A^-2 - A^-4"));
  EXPECT_EQ(aj_bracket(hopf(2, 1)), aj_bracket(hopf(1, 2)));
  EXPECT_EQ(aj_bracket(testing::kink()), P("-A^-3"));
  EXPECT_THROW(aj_bracket(TiedDiagram({}, {}, {})), DiagramError);
}

TEST(BracketTest, GoldenLinks) {
  const Laurent expected = P(
      "A^19 - 3A^15 - A^13c + 2A^13 + 2A^11c + 6A^11 + 4A^9c + A^7c^2 - 2A^7c - 4A^7 - A^5c - A^3c^2 + "
      "2A^3c + 6A^3 - 2A - 4c/A - 11/A - 5c/A^3 - 4/A^3 - c^2/A^5 + 2/A^5 - c/A^7 - 2/A^7 - 2c/A^9 - "
      "7/A^9 - c/A^11 - 2/A^11 + 3/A^13 + c/A^15 - 1/A^17");
  EXPECT_EQ(expected.size(), 30u);
  EXPECT_EQ(aj_bracket(fixture("L11n304")), expected);
  EXPECT_EQ(aj_bracket(fixture("L11n412")), expected);
}

TEST(KauffmanTest, StateSum) {
  EXPECT_EQ(kauffman_bracket(TiedDiagram({}, {}, {1})), Laurent(1));
  EXPECT_EQ(kauffman_bracket(hopf(1, 1)), P("-A^4 - A^-4"));
  EXPECT_EQ(kauffman_bracket(fixture("trefoil")), P("-A^5 - A^-3 + A^-7"));
  EXPECT_EQ(kauffman_bracket(testing::kink()), P("-A^-3"));
  EXPECT_EQ(kauffman_bracket(TiedDiagram({}, {}, {1, 1})), Laurent::loop_value());
  EXPECT_THROW(kauffman_bracket(hopf(1, 2)), MultiColorInput);
}

TEST(WritheTest, Values) {
  const TiedDiagram circle({}, {}, {1});
  EXPECT_EQ(writhe(circle, Orientation::forward(circle)), 0);
  const TiedDiagram h = hopf(1, 1);
  const int w = writhe(h, Orientation::forward(h));
  EXPECT_EQ(std::abs(w), 2);
  EXPECT_EQ(writhe(h, Orientation::from_signs(h, {-1, -1})), w);
  EXPECT_EQ(writhe(h, Orientation::from_signs(h, {1, -1})), -w);
  const TiedDiagram trefoil = fixture("trefoil");
  EXPECT_EQ(writhe(trefoil, Orientation::forward(trefoil)), 3);
  EXPECT_EQ(crossing_signs(trefoil, Orientation::forward(trefoil)), (std::vector<int>{1, 1, 1}));
  const TiedDiagram k = testing::kink();
  EXPECT_EQ(std::abs(writhe(k, Orientation::forward(k))), 1);
  EXPECT_THROW(Orientation::from_signs(h, {1}), std::invalid_argument);
  EXPECT_THROW(Orientation::from_signs(h, {1, 2}), std::invalid_argument);
  EXPECT_THROW(writhe(h, Orientation{{false}}), std::invalid_argument);
}

TEST(JonesTest, Values) {
  const TiedDiagram circle({}, {}, {1});
  EXPECT_EQ(tied_jones(circle, Orientation::forward(circle)), Laurent(1));
  const TiedDiagram trefoil = fixture("trefoil");
  EXPECT_EQ(tied_jones(trefoil, Orientation::forward(trefoil)), P("A^-4 + A^-12 - A^-16"));
  EXPECT_EQ(writhe_factor(-1), P("-A^3"));
  EXPECT_EQ(writhe_factor(2), P("A^-6"));

  // Orientations giving both links writhe -7.
  const TiedDiagram a = fixture("L11n304");
  const TiedDiagram b = fixture("L11n412");
  const Orientation oa = Orientation::from_signs(a, {1, 1, -1});
  const Orientation ob = Orientation::forward(b);
  ASSERT_EQ(writhe(a, oa), -7);
  ASSERT_EQ(writhe(b, ob), -7);
  EXPECT_EQ(tied_jones(a, oa), tied_jones(b, ob));
}

TEST(IndependenceTest, Examples) {
  EXPECT_TRUE(independence_check(TiedDiagram({}, {}, {1, 2}), 5, 1));
  EXPECT_TRUE(independence_check(hopf(1, 2), 100, 2));
  EXPECT_TRUE(independence_check(fixture("L11n304"), 20, 3));
}

class EnginePropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{99};
  check::RandomDiagramOptions options_{};

  TiedDiagram random() { return check::random_diagram(rng_, options_); }
};

TEST_F(EnginePropertyTest, StrategyIndependence) {
  for (int i = 0; i < 150; ++i) {
    const TiedDiagram d = random();
    const Laurent reference = aj_bracket(d);
    std::vector<std::uint32_t> order(d.crossing_count());
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng_);
    PriorityStrategy priority(order);
    EXPECT_EQ(aj_bracket(d, priority), reference);
    RandomStrategy random_choice(rng_());
    EXPECT_EQ(resolve(d, random_choice).evaluate(), reference);
  }
}

TEST_F(EnginePropertyTest, AgreesWithNaiveExpander) {
  for (int i = 0; i < 150; ++i) {
    const TiedDiagram d = random();
    EXPECT_EQ(aj_bracket(d), check::naive_bracket(testing::to_raw(d))) << canonical_code(d);
  }
}

TEST_F(EnginePropertyTest, CircleAxioms) {
  const TiedDiagram circle({}, {}, {1});
  for (int i = 0; i < 150; ++i) {
    const TiedDiagram d = random();
    const Laurent value = aj_bracket(d);
    EXPECT_EQ(aj_bracket(disjoint_union(d, circle, false)), Laurent::c() * value);
    const Color shared = static_cast<Color>(1 + rng_() % d.color_count());
    EXPECT_EQ(aj_bracket(disjoint_union(d, circle, true, {{1, shared}})), Laurent::loop_value() * value);
  }
}

TEST_F(EnginePropertyTest, SkeinRelationsAtEveryIllegalCrossing) {
  for (int i = 0; i < 100; ++i) {
    const TiedDiagram d = random();
    const Laurent value = aj_bracket(d);
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
      switch (classify(d, x)) {
        case CrossingClass::IllegalType1:
          EXPECT_EQ(value, Laurent::A() * aj_bracket(smooth_type1(d, x, SameColorSmoothing::Bar0)) +
                               Laurent::A_inv() * aj_bracket(smooth_type1(d, x, SameColorSmoothing::Bar1)));
          break;
        case CrossingClass::IllegalType2:
          EXPECT_EQ(value + aj_bracket(smooth_type2(d, x, MixedSmoothing::Two)),
                    Laurent::delta() * (aj_bracket(smooth_type2(d, x, MixedSmoothing::Zero)) +
                                        aj_bracket(smooth_type2(d, x, MixedSmoothing::One))));
          break;
        case CrossingClass::Legal:
          break;
      }
    }
  }
}

TEST_F(EnginePropertyTest, ClassicalSpecialization) {
  options_.max_colors = 1;
  options_.max_crossings = 10;
  for (int i = 0; i < 100; ++i) {
    const TiedDiagram d = random();
    const Laurent value = aj_bracket(d);
    EXPECT_FALSE(value.has_c());
    EXPECT_EQ(substitute_c_loop(value), value);
    EXPECT_EQ(value, kauffman_bracket(d));
  }
}

TEST_F(EnginePropertyTest, ColorRenamingInvariance) {
  for (int i = 0; i < 100; ++i) {
    const TiedDiagram d = random();
    std::vector<Color> perm(d.color_count());
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng_);
    const TiedDiagram renamed = d.recolored([&](Color c) { return perm[c - 1]; });
    EXPECT_EQ(aj_bracket(renamed), aj_bracket(d)) << canonical_code(d);
  }
}

TEST_F(EnginePropertyTest, WritheIgnoresGlobalReversal) {
  for (int i = 0; i < 150; ++i) {
    const TiedDiagram d = random();
    Orientation o = Orientation::forward(d);
    for (std::size_t c = 0; c < o.reversed.size(); ++c) o.reversed[c] = (rng_() & 1U) != 0;
    Orientation flipped = o;
    for (std::size_t c = 0; c < flipped.reversed.size(); ++c) flipped.reversed[c] = !o.reversed[c];
    EXPECT_EQ(writhe(d, o), writhe(d, flipped));
  }
}

TEST_F(EnginePropertyTest, PathLengthBound) {
  options_.max_crossings = 9;
  for (int i = 0; i < 200; ++i) {
    const TiedDiagram d = random();
    const Complexity root = complexity(d);
    const std::size_t bound = root.total * (root.illegal + 1);
    RandomStrategy strategy(rng_());
    std::size_t deepest = 0;
    walk_tree(d, strategy, [&](const TreeNode& n) {
      deepest = std::max(deepest, n.depth);
      return true;
    });
    EXPECT_LE(deepest, bound) << canonical_code(d);
  }
}

}  // namespace
}  // namespace tiedbracket

namespace tiedbracket {
namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(DotTest, TiedHopfTree) {
  DefaultStrategy strategy;
  std::ostringstream out;
  const DotStats stats = write_tree_dot(out, testing::hopf(1, 2), strategy);
  EXPECT_EQ(stats.nodes, 8u);
  EXPECT_FALSE(stats.truncated);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("digraph", 0), 0u);
  EXPECT_EQ(count(text, "shape=box"), 5u);
  EXPECT_EQ(count(text, " -> "), 7u);
  EXPECT_NE(text.find("label=\"delta\""), std::string::npos);
  EXPECT_NE(text.find("label=\"-1\""), std::string::npos);
  EXPECT_NE(text.find(":two\\nk=2 gamma=2"), std::string::npos);
}

TEST(DotTest, KinkTree) {
  DefaultStrategy strategy;
  std::ostringstream out;
  EXPECT_EQ(write_tree_dot(out, testing::kink(), strategy).nodes, 3u);
  EXPECT_NE(out.str().find("label=\"A^-1\""), std::string::npos);
}

TEST(DotTest, Truncates) {
  DefaultStrategy strategy;
  std::ostringstream out;
  const DotStats stats = write_tree_dot(out, testing::fixture("L11n304"), strategy, 10);
  EXPECT_EQ(stats.nodes, 10u);
  EXPECT_TRUE(stats.truncated);
  EXPECT_NE(out.str().find("output truncated after 10 nodes"), std::string::npos);
  EXPECT_EQ(out.str().substr(out.str().size() - 2), "}\n");
}

}  // namespace
}  // namespace tiedbracket
