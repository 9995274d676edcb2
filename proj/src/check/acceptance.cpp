#include "tiedbracket/check/acceptance.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "tiedbracket/check/naive_expander.hpp"
#include "tiedbracket/check/random_diagram.hpp"
#include "tiedbracket/classical.hpp"
#include "tiedbracket/engine.hpp"

namespace tiedbracket::check {

namespace {

using Details = std::vector<std::string>;

bool golden(const std::vector<FixtureEntry>& catalog, const AcceptanceOptions&, Details& details) {
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& e : catalog) {
    if (!e.has_tag("golden")) continue;
    ++checked;
    if (!e.expected_bracket) {
      details.push_back(e.name + ": no expected bracket");
      ok = false;
      continue;
    }
    const Laurent value = aj_bracket(e.diagram());
    if (value != *e.expected_bracket) {
      details.push_back(e.name + ": got " + render_poly(value));
      ok = false;
    } else {
      details.push_back(e.name + ": " + std::to_string(value.size()) + " terms match");
    }
  }
  if (checked < 2) {
    details.push_back("expected both golden fixtures in the catalog");
    ok = false;
  }
  return ok;
}

bool table1(const std::vector<FixtureEntry>& catalog, const AcceptanceOptions&, Details& details) {
  bool ok = true;
  std::size_t rows = 0;
  for (const auto& e : catalog) {
    if (!e.expected_difference) continue;
    ++rows;
    const FixtureEntry* partner = find_fixture(catalog, e.expected_difference->partner);
    const Laurent diff = aj_bracket(e.diagram()) - aj_bracket(partner->diagram());
    const std::string row = e.name + " vs " + partner->name;
    if (diff.is_zero()) {
      details.push_back(row + ": difference is zero");
      ok = false;
    } else if (diff != e.expected_difference->value) {
      std::string note = diff == -e.expected_difference->value ? " (negative of the expected polynomial)" : "";
      details.push_back(row + ": got " + render_poly(diff) + note);
      ok = false;
    } else {
      details.push_back(row + ": DISTINGUISHED, difference matches");
    }
  }
  if (rows < 5) {
    details.push_back("expected five difference rows, found " + std::to_string(rows));
    ok = false;
  }
  return ok;
}

bool classical_oracle(const std::vector<FixtureEntry>& catalog, const AcceptanceOptions& options,
                      Details& details) {
  bool ok = true;
  auto check = [&](const std::string& label, const TiedDiagram& d) {
    const Laurent tied = aj_bracket(d);
    const Laurent classical = kauffman_bracket(d);
    if (tied != classical || tied.has_c() || substitute_c_loop(tied) != tied) {
      details.push_back(label + ": double bracket " + render_poly(tied) + ", state sum " +
                        render_poly(classical));
      ok = false;
    }
  };
  std::size_t fixtures = 0;
  for (const auto& e : catalog) {
    const TiedDiagram d = e.diagram();
    if (d.color_count() != 1 || d.crossing_count() > 12) continue;
    ++fixtures;
    check(e.name, d);
  }
  std::mt19937_64 rng(options.seed);
  RandomDiagramOptions random;
  random.max_colors = 1;
  random.max_crossings = 10;
  for (int i = 0; i < 50; ++i) check("random #" + std::to_string(i), random_diagram(rng, random));
  details.push_back(std::to_string(fixtures) + " single-color fixtures and 50 random diagrams");
  return ok;
}

bool jones(const std::vector<FixtureEntry>& catalog, const AcceptanceOptions&, Details& details) {
  bool ok = true;
  auto calibrate = [&](const std::string& name, int expected_writhe, const char* expected) {
    const FixtureEntry* e = find_fixture(catalog, name);
    if (e == nullptr) {
      details.push_back(name + ": missing from catalog");
      ok = false;
      return;
    }
    const TiedDiagram d = e->diagram();
    const Orientation o = Orientation::forward(d);
    const int w = writhe(d, o);
    const Laurent value = tied_jones(d, o);
    const Laurent classical = writhe_factor(w) * kauffman_bracket(d);
    const bool match = w == expected_writhe && value == parse_poly(expected) &&
                       substitute_c_loop(value) == classical;
    details.push_back(name + ": w=" + std::to_string(w) + ", J=" + render_poly(value));
    ok = ok && match;
  };
  // t + t^3 - t^4 with t = A^-4: the trefoil with three positive crossings.
  calibrate("trefoil", 3, "A^-4 + A^-12 - A^-16");
  calibrate("figure8", 0, "A^8 - A^4 + 1 - A^-4 + A^-8");
  return ok;
}

bool independence(const std::vector<FixtureEntry>& catalog, const AcceptanceOptions& options,
                  Details& details) {
  bool ok = true;
  for (const auto& e : catalog) {
    if (!independence_check(e.diagram(), options.trials, options.seed)) {
      details.push_back(e.name + ": a random tree disagrees with the default tree");
      ok = false;
    }
  }
  details.push_back(std::to_string(catalog.size()) + " fixtures x " + std::to_string(options.trials) +
                    " random strategies");
  return ok;
}

bool axioms(const std::vector<FixtureEntry>&, const AcceptanceOptions& options, Details& details) {
  bool ok = true;
  auto fail = [&](const std::string& what, const TiedDiagram& d) {
    if (details.size() < 10) details.push_back(what + " fails on " + canonical_code(d));
    ok = false;
  };
  const TiedDiagram circle({}, {}, {1});
  if (aj_bracket(circle) != Laurent(1)) fail("unknot", circle);

  std::mt19937_64 rng(options.seed ^ 0x5eedULL);
  RandomDiagramOptions random;
  random.max_crossings = 8;
  random.max_colors = 3;
  std::size_t type1 = 0;
  std::size_t type2 = 0;
  for (int i = 0; i < 200; ++i) {
    const TiedDiagram d = random_diagram(rng, random);
    const Laurent value = aj_bracket(d);

    if (aj_bracket(disjoint_union(d, circle, false)) != Laurent::c() * value) fail("new-color circle", d);
    const Color shared = static_cast<Color>(std::uniform_int_distribution<std::size_t>(1, d.color_count())(rng));
    if (aj_bracket(disjoint_union(d, circle, true, {{1, shared}})) != Laurent::loop_value() * value) {
      fail("same-color circle", d);
    }

    std::vector<std::size_t> same;
    std::vector<std::size_t> mixed;
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
      const CrossingClass cls = classify(d, x);
      if (cls == CrossingClass::IllegalType1) same.push_back(x);
      if (cls == CrossingClass::IllegalType2) mixed.push_back(x);
    }
    auto pick = [&](const std::vector<std::size_t>& xs) {
      return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
    };
    if (!same.empty()) {
      ++type1;
      const std::size_t x = pick(same);
      const Laurent rhs = Laurent::A() * aj_bracket(smooth_type1(d, x, SameColorSmoothing::Bar0)) +
                          Laurent::A_inv() * aj_bracket(smooth_type1(d, x, SameColorSmoothing::Bar1));
      if (value != rhs) fail("same-color skein relation", d);
    }
    if (!mixed.empty()) {
      ++type2;
      const std::size_t x = pick(mixed);
      const Laurent lhs = value + aj_bracket(smooth_type2(d, x, MixedSmoothing::Two));
      const Laurent rhs = Laurent::delta() * (aj_bracket(smooth_type2(d, x, MixedSmoothing::Zero)) +
                                              aj_bracket(smooth_type2(d, x, MixedSmoothing::One)));
      if (lhs != rhs) fail("mixed-color skein relation", d);
    }
  }
  details.push_back("200 random diagrams; same-color relation checked on " + std::to_string(type1) +
                    ", mixed-color relation on " + std::to_string(type2));
  if (type1 == 0 || type2 == 0) {
    details.push_back("the generator never produced a crossing of one illegal type");
    ok = false;
  }
  return ok;
}

bool hand_hopf(const std::vector<FixtureEntry>&, const AcceptanceOptions&, Details& details) {
  const Laurent expected = parse_poly("-c - A^4 - A^2 - A^-2 - A^-4");
  RawDiagram raw;
  raw.crossings = {{1, 3, 2, 4}, {3, 1, 4, 2}};
  raw.arc_color = {{1, 1}, {2, 1}, {3, 2}, {4, 2}};
  const Laurent naive = naive_bracket(raw);
  const TiedDiagram d = TiedDiagram::from_component_colors({{1, 3, 2, 4}, {3, 1, 4, 2}}, {1, 2}, {});
  const Laurent engine = aj_bracket(d);
  details.push_back("naive expander " + render_poly(naive) + ", engine " + render_poly(engine));
  return naive == expected && engine == expected;
}

bool termination(const std::vector<FixtureEntry>&, const AcceptanceOptions& options, Details& details) {
  bool ok = true;
  auto fail = [&](const std::string& what) {
    if (details.size() < 10) details.push_back(what);
    ok = false;
  };
  std::mt19937_64 rng(options.seed ^ 0x7e3aULL);
  RandomDiagramOptions random;
  random.max_crossings = 10;
  std::size_t steps = 0;
  std::size_t by_kind[5] = {};
  while (steps < 1000) {
    TiedDiagram d = random_diagram(rng, random);
    while (steps < 1000) {
      std::vector<std::size_t> illegal;
      for (std::size_t x = 0; x < d.crossing_count(); ++x) {
        if (classify(d, x) != CrossingClass::Legal) illegal.push_back(x);
      }
      if (illegal.empty()) break;
      const std::size_t x = illegal[std::uniform_int_distribution<std::size_t>(0, illegal.size() - 1)(rng)];
      const Complexity before = complexity(d);
      const std::size_t colors_before = d.color_count();
      TiedDiagram next;
      Move move;
      if (classify(d, x) == CrossingClass::IllegalType1) {
        move = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Move::Bar0 : Move::Bar1;
        next = smooth_type1(d, x, move == Move::Bar0 ? SameColorSmoothing::Bar0 : SameColorSmoothing::Bar1);
      } else {
        const int k = std::uniform_int_distribution<int>(0, 2)(rng);
        move = k == 0 ? Move::Two : (k == 1 ? Move::Zero : Move::One);
        next = smooth_type2(d, x, k == 0 ? MixedSmoothing::Two : (k == 1 ? MixedSmoothing::Zero : MixedSmoothing::One));
      }
      ++steps;
      ++by_kind[static_cast<int>(move)];
      validate(next);
      const Complexity after = complexity(next);
      std::ostringstream step;
      step << to_string(move) << " step (" << before.total << "," << before.illegal << ") -> (" << after.total
           << "," << after.illegal << ")";
      if (!(after < before)) fail(step.str() + " does not decrease");
      if ((move == Move::Bar0 || move == Move::Bar1) &&
          (after.total != before.total - 1 || after.illegal != before.illegal - 1)) {
        fail(step.str() + " is not (n-1,k-1)");
      }
      if (move == Move::Two && (after.total != before.total || after.illegal != before.illegal - 1)) {
        fail(step.str() + " is not (n,k-1)");
      }
      if ((move == Move::Zero || move == Move::One) &&
          (after.total != before.total - 1 || next.color_count() != colors_before - 1)) {
        fail(step.str() + " does not remove one crossing and one color");
      }
      d = std::move(next);
    }
  }
  std::ostringstream summary;
  summary << steps << " steps: " << by_kind[0] + by_kind[1] << " same-color, " << by_kind[2] << " switch, "
          << by_kind[3] + by_kind[4] << " merge";
  details.push_back(summary.str());
  return ok;
}

bool catalog_values(const std::vector<FixtureEntry>& catalog, const AcceptanceOptions&, Details& details) {
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& e : catalog) {
    if (!e.expected_bracket) continue;
    ++checked;
    const Laurent value = aj_bracket(e.diagram());
    if (value != *e.expected_bracket) {
      details.push_back(e.name + ": got " + render_poly(value));
      ok = false;
    }
  }
  details.push_back(std::to_string(checked) + " expected brackets");
  return ok;
}

struct Criterion {
  int id;
  const char* key;
  const char* title;
  std::function<bool(const std::vector<FixtureEntry>&, const AcceptanceOptions&, Details&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "golden", "golden bracket of L11n304 and L11n412", golden},
      {2, "table1", "difference polynomials of the distinguished pairs", table1},
      {3, "classical", "double bracket equals the Kauffman state sum on single-color diagrams",
       classical_oracle},
      {4, "jones", "Jones calibration of the trefoil and figure-eight", jones},
      {5, "independence", "random resolution trees reproduce the default value", independence},
      {6, "axioms", "skein axioms on 200 random diagrams", axioms},
      {7, "hopf", "tied Hopf link against the naive expander", hand_hopf},
      {8, "termination", "complexity drops on 1000 random smoothing steps", termination},
      {0, "catalog", "catalog expected brackets re-verify", catalog_values},
  };
  return list;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const auto& catalog = options.catalog != nullptr ? *options.catalog : load_catalog();
  std::vector<CriterionResult> results;
  for (const auto& c : criteria()) {
    const std::string key = c.key;
    const std::string title = c.title;
    if (!options.filter.empty() && key.find(options.filter) == std::string::npos &&
        title.find(options.filter) == std::string::npos) {
      continue;
    }
    CriterionResult r{c.id, key, title, false, {}};
    try {
      r.passed = c.run(catalog, options, r.details);
    } catch (const std::exception& e) {
      r.details.push_back(std::string("exception: ") + e.what());
      r.passed = false;
    }
    results.push_back(std::move(r));
  }
  return results;
}

void print_results(std::ostream& out, const std::vector<CriterionResult>& results, bool verbose) {
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  ";
    if (r.id > 0) {
      out << "[" << r.id << "] ";
    } else {
      out << "[-] ";
    }
    out << r.key << ": " << r.title << '\n';
    if (verbose || !r.passed) {
      for (const auto& d : r.details) out << "        " << d << '\n';
    }
  }
}

}  // namespace tiedbracket::check
