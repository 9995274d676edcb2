#include "tiedbracket/io.hpp"

#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "tiedbracket/catalog.hpp"
#include "tiedbracket/check/random_diagram.hpp"
#include "tiedbracket/engine.hpp"

namespace tiedbracket {
namespace {

TEST(ParseDiagramTest, TiedHopf) {
  const TiedDiagram d = parse_diagram("pd: X[1,3,2,4] X[3,1,4,2]\ncolors: 1 2\n");
  EXPECT_EQ(d.crossing_count(), 2u);
  EXPECT_EQ(d.color_count(), 2u);
  EXPECT_EQ(aj_bracket(d), parse_poly("-c - A^4 - A^2 - A^-2 - A^-4"));
}

TEST(ParseDiagramTest, SemicolonsAndComments) {
  const TiedDiagram d = parse_diagram("# two crossings\npd: X[1,3,2,4] X[3,1,4,2]; colors: 2 1  # swapped");
  EXPECT_EQ(aj_bracket(d), aj_bracket(testing::hopf(1, 2)));
}

TEST(ParseDiagramTest, FreeLoops) {
  const TiedDiagram d = parse_diagram("loops: 1 2");
  EXPECT_EQ(d.crossing_count(), 0u);
  EXPECT_EQ(d.free_loops().size(), 2u);
  EXPECT_EQ(aj_bracket(d), Laurent::c());
  EXPECT_EQ(aj_bracket(parse_diagram("loops: 3 3")), Laurent::loop_value());
}

TEST(ParseDiagramTest, DefaultsToOneColor) {
  const TiedDiagram d = parse_diagram("pd: X[1,3,2,4] X[3,1,4,2]");
  EXPECT_EQ(d.color_count(), 1u);
}

TEST(ParseDiagramTest, LinkinfoFormIsAccepted) {
  const TiedDiagram d = parse_diagram("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]");
  EXPECT_EQ(aj_bracket(d), parse_poly("-A^5 - A^-3 + A^-7"));
}

TEST(ParseDiagramTest, ErrorsCarryPositions) {
  try {
    parse_diagram("pd: X[1,3,2]");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GT(e.column(), 1u);
  }
  try {
    parse_diagram("pd: X[1,1,2,2]\nshape: x");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("unknown key"), std::string::npos);
  }
  EXPECT_THROW(parse_diagram("pd: X[1,1,2,2]\npd: X[1,1,2,2]"), ParseError);
  EXPECT_THROW(parse_diagram("pd: X[1 1,2,2]"), ParseError);
  EXPECT_THROW(parse_diagram("colors: 1 x"), ParseError);
  EXPECT_THROW(parse_diagram("loops: 0"), ParseError);
}

TEST(ParseDiagramTest, StructuralErrors) {
  EXPECT_THROW(parse_diagram("pd: X[1,3,2,5]"), DiagramError);
  EXPECT_THROW(parse_diagram("pd: X[1,3,2,4] X[3,1,4,2]\ncolors: 1 2 3"), DiagramError);
  EXPECT_THROW(parse_diagram(""), DiagramError);
}

TEST(IngestTest, LinkinfoPd) {
  EXPECT_EQ(ingest_linkinfo_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]"),
            "pd: X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  EXPECT_EQ(ingest_linkinfo_pd("  PD[ X[1, 1, 2, 2] ]\n"), "pd: X[1,1,2,2]");
  EXPECT_THROW(ingest_linkinfo_pd("PD[X[1,1,2,2], Y[3,4,5,6]]"), ParseError);
  EXPECT_THROW(ingest_linkinfo_pd("X[1,1,2,2]"), ParseError);
}

TEST(RenderTest, RoundTripsRandomDiagrams) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const TiedDiagram d = check::random_diagram(rng);
    const std::string text = render_diagram(d);
    const TiedDiagram back = parse_diagram(text);
    EXPECT_EQ(canonical_code(back), canonical_code(d)) << text;
    EXPECT_EQ(render_diagram(back), text);
  }
}

TEST(CatalogTest, EmbeddedCatalogLoads) {
  const auto& catalog = load_catalog();
  ASSERT_FALSE(catalog.empty());
  for (const auto& e : catalog) {
    EXPECT_NO_THROW(e.diagram()) << e.name;
    if (e.expected_bracket || e.expected_difference) EXPECT_FALSE(e.source.empty()) << e.name;
  }
  const FixtureEntry* unknot = find_fixture(catalog, "unknot");
  ASSERT_NE(unknot, nullptr);
  EXPECT_EQ(unknot->expected_bracket, Laurent(1));
  const FixtureEntry* hopf = find_fixture(catalog, "tiedHopf12");
  ASSERT_NE(hopf, nullptr);
  EXPECT_TRUE(hopf->has_tag("tied"));
  EXPECT_EQ(aj_bracket(hopf->diagram()), *hopf->expected_bracket);
}

TEST(CatalogTest, LookupByLinkName) {
  const auto& catalog = load_catalog();
  const FixtureEntry* byLink = find_fixture(catalog, "L6a1");
  ASSERT_NE(byLink, nullptr);
  EXPECT_EQ(byLink->name, "figure4root");
  EXPECT_EQ(find_fixture(catalog, "nonesuch"), nullptr);
}

TEST(CatalogTest, TableDifference) {
  const auto& catalog = load_catalog();
  const FixtureEntry* e = find_fixture(catalog, "L11n358{0,1}");
  ASSERT_NE(e, nullptr);
  ASSERT_TRUE(e->expected_difference.has_value());
  EXPECT_EQ(e->expected_difference->partner, "L11n418{0,0}");
  const Laurent& diff = e->expected_difference->value;
  EXPECT_EQ(diff.size(), 26u);
  EXPECT_EQ(diff.coefficient(17), 1);
  EXPECT_EQ(diff.coefficient(15, 1), 1);
  EXPECT_EQ(diff.coefficient(15), 1);
  EXPECT_EQ(diff.coefficient(19), 0);
  const FixtureEntry* partner = find_fixture(catalog, e->expected_difference->partner);
  ASSERT_NE(partner, nullptr);
  EXPECT_EQ(aj_bracket(e->diagram()) - aj_bracket(partner->diagram()), e->expected_difference->value);
}

TEST(CatalogTest, MalformedCatalogs) {
  EXPECT_THROW(parse_catalog("name: a\npd: X[1,1,2,2]\nflavor: sweet\n"), CatalogError);
  EXPECT_THROW(parse_catalog("name: a\npd: X[1,1,2,2]\nexpect_bracket: -A^-3\n"), CatalogError);
  EXPECT_THROW(parse_catalog("name: a\npd: X[1,1,2]\n"), CatalogError);
  EXPECT_THROW(parse_catalog("name: a\nloops: 1\n\nname: a\nloops: 1\n"), CatalogError);
  EXPECT_THROW(parse_catalog("name: a\nloops: 1\nexpect_diff_with: b = 1\nsource: x\n"), CatalogError);
  EXPECT_THROW(parse_catalog("name: a\nloops: 1\nexpect_bracket: 1 +\nsource: x\n"), CatalogError);
  EXPECT_THROW(parse_catalog("pd: X[1,1,2,2]\n"), CatalogError);
  try {
    parse_catalog("name: a\nloops: 1\n\nname: b\nloops: 1\noops\n");
    FAIL() << "no error";
  } catch (const CatalogError& e) {
    EXPECT_EQ(e.line(), 6u);
  }
  EXPECT_EQ(parse_catalog("# nothing\n\n").size(), 0u);
}

}  // namespace
}  // namespace tiedbracket
