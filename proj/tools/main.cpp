// tiedbracket: command line front end.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiedbracket/catalog.hpp"
#include "tiedbracket/check/acceptance.hpp"
#include "tiedbracket/classical.hpp"
#include "tiedbracket/dot.hpp"
#include "tiedbracket/engine.hpp"
#include "tiedbracket/io.hpp"

namespace tb = tiedbracket;
using nlohmann::json;

namespace {

constexpr int kInputError = 1;
constexpr int kSelftestFailure = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> inputs;
  std::vector<std::string> fixtures;
  std::string catalog_path;
  bool json = false;
  bool dot = false;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string filter;
  bool verbose = false;
  std::vector<std::string> orientation;
  std::vector<std::string> oriented;
  std::size_t max_nodes = 5000;
};

const std::vector<tb::FixtureEntry>& catalog(const Options& opt) {
  static std::optional<std::vector<tb::FixtureEntry>> custom;
  if (opt.catalog_path.empty()) return tb::load_catalog();
  if (!custom) custom = tb::load_catalog(opt.catalog_path);
  return *custom;
}

struct NamedDiagram {
  std::string name;
  tb::TiedDiagram diagram;
};

NamedDiagram from_fixture(const Options& opt, const std::string& name) {
  const tb::FixtureEntry* e = tb::find_fixture(catalog(opt), name);
  if (e == nullptr) throw InputError("unknown fixture '" + name + "'");
  return {e->name, e->diagram()};
}

// A path to a diagram file, "-" for standard input, or inline diagram text.
NamedDiagram from_input(const std::string& input) {
  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else if (std::error_code ec; std::filesystem::is_regular_file(input, ec)) {
    std::ifstream file(input);
    if (!file) throw InputError("cannot read " + input);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  } else {
    text = input;
  }
  return {input, tb::parse_diagram(text)};
}

std::vector<NamedDiagram> diagrams(const Options& opt) {
  std::vector<NamedDiagram> out;
  for (const auto& f : opt.fixtures) out.push_back(from_fixture(opt, f));
  for (const auto& i : opt.inputs) out.push_back(from_input(i));
  return out;
}

NamedDiagram single(const Options& opt) {
  auto all = diagrams(opt);
  if (all.size() != 1) throw InputError("expected exactly one diagram (file, inline text or --fixture)");
  return std::move(all.front());
}

std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> signs;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token == "+1" || token == "1" || token == "+") {
      signs.push_back(1);
    } else if (token == "-1" || token == "-") {
      signs.push_back(-1);
    } else {
      throw InputError("orientation entries must be +1 or -1, got '" + token + "'");
    }
  }
  return signs;
}

tb::Orientation orientation_for(const tb::TiedDiagram& d, const std::string* signs) {
  if (signs == nullptr) return tb::Orientation::forward(d);
  try {
    return tb::Orientation::from_signs(d, parse_signs(*signs));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void print_poly(const Options& opt, const tb::Laurent& p) {
  if (opt.json) {
    std::cout << tb::poly_to_json(p).dump() << '\n';
  } else {
    std::cout << tb::render_poly(p) << '\n';
  }
}

int cmd_bracket(const Options& opt) {
  print_poly(opt, tb::aj_bracket(single(opt).diagram));
  return 0;
}

int cmd_kauffman(const Options& opt) {
  try {
    print_poly(opt, tb::kauffman_bracket(single(opt).diagram));
  } catch (const tb::MultiColorInput& e) {
    throw InputError(e.what());
  }
  return 0;
}

int cmd_jones(const Options& opt) {
  const auto input = single(opt);
  const auto o = orientation_for(input.diagram, opt.orientation.empty() ? nullptr : &opt.orientation.front());
  const int w = tb::writhe(input.diagram, o);
  const tb::Laurent value = tb::writhe_factor(w) * tb::aj_bracket(input.diagram);
  if (opt.json) {
    std::cout << json{{"writhe", w}, {"jones", tb::poly_to_json(value)}}.dump() << '\n';
  } else {
    std::cout << tb::render_poly(value) << '\n';
    std::cout << "writhe: " << w << '\n';
  }
  return 0;
}

int cmd_states(const Options& opt) {
  const auto input = single(opt);
  tb::DefaultStrategy strategy;
  const tb::StateSum sum = tb::resolve(input.diagram, strategy, {.with_codes = true}).merged_by_code();
  const tb::Laurent total = sum.evaluate();
  if (opt.json) {
    json rows = json::array();
    for (const auto& e : sum.entries) {
      rows.push_back({{"code", e.summary.code.value_or("")},
                      {"k", e.summary.components},
                      {"gamma", e.summary.colors},
                      {"crossings", e.summary.crossings_left},
                      {"weight", tb::poly_to_json(e.weight)},
                      {"value", tb::poly_to_json(tb::state_value(e.summary))}});
    }
    std::cout << json{{"states", rows}, {"total", tb::poly_to_json(total)}}.dump(2) << '\n';
    return 0;
  }
  std::cout << "#\tk\tgamma\tcrossings\tf(s)\tP(s)\tcode\n";
  std::size_t row = 0;
  for (const auto& e : sum.entries) {
    std::cout << ++row << '\t' << e.summary.components << '\t' << e.summary.colors << '\t'
              << e.summary.crossings_left << '\t' << tb::render_poly(e.weight) << '\t'
              << tb::render_poly(tb::state_value(e.summary)) << '\t' << e.summary.code.value_or("") << '\n';
  }
  std::cout << "sum\t\t\t\t" << tb::render_poly(total) << '\n';
  return 0;
}

int cmd_tree(const Options& opt) {
  const auto input = single(opt);
  tb::DefaultStrategy strategy;
  if (opt.dot) {
    const auto stats = tb::write_tree_dot(std::cout, input.diagram, strategy, opt.max_nodes);
    if (stats.truncated) std::cerr << "note: tree truncated after " << stats.nodes << " nodes\n";
    return 0;
  }
  std::size_t nodes = 0;
  tb::walk_tree(input.diagram, strategy, [&](const tb::TreeNode& n) {
    if (nodes++ >= opt.max_nodes) {
      std::cout << "... truncated after " << opt.max_nodes << " nodes\n";
      return false;
    }
    std::cout << std::string(2 * n.depth, ' ');
    if (n.via) std::cout << tb::label_text(*n.via) << " [" << n.via_origin << ':' << tb::to_string(*n.via) << "] ";
    std::cout << '(' << n.complexity.total << ',' << n.complexity.illegal << ')';
    if (n.leaf) {
      std::cout << " k=" << tb::component_count(*n.diagram) << " gamma=" << n.diagram->color_count();
    }
    std::cout << '\n';
    return true;
  });
  return 0;
}

int cmd_distinguish(const Options& opt) {
  auto pair = diagrams(opt);
  if (pair.size() != 2) throw InputError("distinguish needs exactly two diagrams");
  const tb::Laurent first = tb::aj_bracket(pair[0].diagram);
  const tb::Laurent second = tb::aj_bracket(pair[1].diagram);
  const tb::Laurent diff = first - second;
  const bool distinguished = !diff.is_zero();

  json out{{"first", pair[0].name},
           {"second", pair[1].name},
           {"difference", tb::poly_to_json(diff)},
           {"distinguished", distinguished}};
  std::optional<std::pair<int, int>> writhes;
  if (!opt.oriented.empty()) {
    if (opt.oriented.size() != 2) throw InputError("--oriented takes one sign list per diagram");
    writhes = std::pair{tb::writhe(pair[0].diagram, orientation_for(pair[0].diagram, &opt.oriented[0])),
                        tb::writhe(pair[1].diagram, orientation_for(pair[1].diagram, &opt.oriented[1]))};
    const tb::Laurent jones_diff =
        tb::writhe_factor(writhes->first) * first - tb::writhe_factor(writhes->second) * second;
    out["writhes"] = {writhes->first, writhes->second};
    out["jones_difference"] = tb::poly_to_json(jones_diff);
    out["jones_distinguished"] = !jones_diff.is_zero();
  }

  if (opt.json) {
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << tb::render_poly(diff) << '\n';
  std::cout << (distinguished ? "DISTINGUISHED" : "NOT DISTINGUISHED") << '\n';
  if (writhes) {
    std::cout << "writhes: " << writhes->first << ' ' << writhes->second << '\n';
    if (writhes->first == writhes->second) {
      std::cout << "equal writhes: tied Jones " << (distinguished ? "DISTINGUISHED" : "NOT DISTINGUISHED") << '\n';
    } else {
      std::cout << "tied Jones " << (out["jones_distinguished"].get<bool>() ? "DISTINGUISHED" : "NOT DISTINGUISHED")
                << '\n';
    }
  }
  return 0;
}

int cmd_selftest(const Options& opt) {
  namespace check = tb::check;
  check::AcceptanceOptions options;
  options.filter = opt.filter;
  options.seed = opt.seed;
  options.trials = opt.trials;
  options.catalog = &catalog(opt);
  const auto results = check::run_acceptance(options);
  if (results.empty()) throw InputError("no criterion matches filter '" + opt.filter + "'");
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (opt.json) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"id", r.id}, {"key", r.key}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
    }
    std::cout << json{{"passed", all}, {"criteria", rows}}.dump(2) << '\n';
  } else {
    check::print_results(std::cout, results, opt.verbose);
  }
  return all ? 0 : kSelftestFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double bracket and tied Jones polynomial of tied link diagrams"};
  app.require_subcommand(1);
  Options opt;

  auto diagram_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.inputs, "diagram file, '-' for stdin, or inline text such as \"pd: X[1,1,2,2]\"");
    sub->add_option("--fixture", opt.fixtures, "catalog fixture by name or link name");
    sub->add_option("--catalog", opt.catalog_path, "read fixtures from this catalog file");
    sub->add_flag("--json", opt.json, "machine-readable output");
    return sub;
  };

  auto* bracket = diagram_command("bracket", "double bracket of a tied diagram");
  auto* kauffman = diagram_command("kauffman", "classical Kauffman bracket of a single-color diagram");
  auto* jones = diagram_command("jones", "tied Jones polynomial");
  jones->add_option("--orientation", opt.orientation,
                    "comma-separated +1/-1 per component, default all +1")
      ->expected(1);
  auto* states = diagram_command("states", "AJ-states grouped by diagram, with weights");
  auto* tree = diagram_command("tree", "resolution tree");
  tree->add_flag("--dot", opt.dot, "emit Graphviz DOT");
  tree->add_option("--max-nodes", opt.max_nodes, "stop after this many nodes")->capture_default_str();
  auto* distinguish = diagram_command("distinguish", "difference of the double brackets of two diagrams");
  distinguish->add_option("--oriented", opt.oriented, "orientation sign lists of both diagrams")->expected(2);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");
  selftest->add_option("--filter", opt.filter, "run only criteria whose key or title contains this text");
  selftest->add_option("--seed", opt.seed, "seed for random strategies and diagrams")->capture_default_str();
  selftest->add_option("--trials", opt.trials, "random strategies per fixture")->capture_default_str();
  selftest->add_option("--catalog", opt.catalog_path, "check this catalog file instead of the built-in one");
  selftest->add_flag("--json", opt.json, "machine-readable output");
  selftest->add_flag("-v,--verbose", opt.verbose, "print details of passing criteria too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (bracket->parsed()) return cmd_bracket(opt);
    if (kauffman->parsed()) return cmd_kauffman(opt);
    if (jones->parsed()) return cmd_jones(opt);
    if (states->parsed()) return cmd_states(opt);
    if (tree->parsed()) return cmd_tree(opt);
    if (distinguish->parsed()) return cmd_distinguish(opt);
    if (selftest->parsed()) return cmd_selftest(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const tb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const tb::DiagramError& e) {
    std::cerr << "invalid diagram: " << e.what() << '\n';
    return kInputError;
  } catch (const tb::CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
