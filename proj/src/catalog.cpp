#include "tiedbracket/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "catalog_data.hpp"
#include "tiedbracket/io.hpp"

namespace tiedbracket {

bool FixtureEntry::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

TiedDiagram FixtureEntry::diagram() const { return parse_diagram(diagram_text); }

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

Laurent poly_field(const std::string& text, std::size_t line) {
  try {
    return parse_poly(text);
  } catch (const PolyParseError& e) {
    throw CatalogError(std::string("bad polynomial: ") + e.what(), line);
  }
}

void finish(FixtureEntry& entry, std::vector<FixtureEntry>& out) {
  if (entry.name.empty()) throw CatalogError("record without a name", entry.line);
  if (entry.diagram_text.empty()) throw CatalogError("record '" + entry.name + "' has no diagram", entry.line);
  if ((entry.expected_bracket || entry.expected_difference) && entry.source.empty()) {
    throw CatalogError("expected value of '" + entry.name + "' has no source", entry.line);
  }
  try {
    entry.diagram();
  } catch (const std::exception& e) {
    throw CatalogError("diagram of '" + entry.name + "' is invalid: " + e.what(), entry.line);
  }
  out.push_back(std::move(entry));
  entry = FixtureEntry{};
}

}  // namespace

std::vector<FixtureEntry> parse_catalog(std::string_view text) {
  std::vector<FixtureEntry> out;
  FixtureEntry current;
  bool open = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) {
      if (open) finish(current, out);
      open = false;
      continue;
    }
    if (line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw CatalogError("expected 'key: value'", line_no);
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    if (!open) {
      current.line = line_no;
      open = true;
    }
    if (key == "name") {
      if (!current.name.empty()) throw CatalogError("two names in one record", line_no);
      current.name = value;
    } else if (key == "link") {
      current.link = value;
    } else if (key == "orientation") {
      current.orientation = value;
    } else if (key == "tags") {
      std::istringstream words(value);
      for (std::string w; words >> w;) current.tags.push_back(w);
    } else if (key == "pd" || key == "loops" || key == "colors") {
      current.diagram_text += key + ": " + value + "\n";
    } else if (key == "expect_bracket") {
      current.expected_bracket = poly_field(value, line_no);
    } else if (key == "expect_diff_with") {
      const auto eq = value.find('=');
      if (eq == std::string::npos) throw CatalogError("expected 'PARTNER = polynomial'", line_no);
      current.expected_difference =
          ExpectedDifference{trim(std::string_view(value).substr(0, eq)),
                             poly_field(value.substr(eq + 1), line_no)};
    } else if (key == "source") {
      current.source = current.source.empty() ? value : current.source + " " + value;
    } else {
      throw CatalogError("unknown key '" + key + "'", line_no);
    }
  }
  if (open) finish(current, out);

  std::set<std::string> names;
  for (const auto& e : out) {
    if (!names.insert(e.name).second) throw CatalogError("duplicate fixture '" + e.name + "'", e.line);
  }
  for (const auto& e : out) {
    if (e.expected_difference && !names.contains(e.expected_difference->partner)) {
      throw CatalogError("unknown partner '" + e.expected_difference->partner + "'", e.line);
    }
  }
  return out;
}

const std::vector<FixtureEntry>& load_catalog() {
  static const std::vector<FixtureEntry> catalog = parse_catalog(kEmbeddedCatalog);
  return catalog;
}

std::vector<FixtureEntry> load_catalog(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw CatalogError("cannot open " + path, 0);
  std::ostringstream text;
  text << file.rdbuf();
  return parse_catalog(text.str());
}

const FixtureEntry* find_fixture(const std::vector<FixtureEntry>& catalog, std::string_view name) {
  for (const auto& e : catalog) {
    if (e.name == name) return &e;
  }
  for (const auto& e : catalog) {
    if (!e.link.empty() && e.link == name) return &e;
  }
  return nullptr;
}

}  // namespace tiedbracket
