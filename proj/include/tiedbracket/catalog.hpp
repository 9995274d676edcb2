// Fixture catalog: named diagrams with expected values and their sources.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tiedbracket/diagram.hpp"
#include "tiedbracket/laurent.hpp"

namespace tiedbracket {

class CatalogError : public std::runtime_error {
 public:
  CatalogError(const std::string& what, std::size_t line)
      : std::runtime_error("catalog line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ExpectedDifference {
  std::string partner;
  Laurent value;
};

struct FixtureEntry {
  std::string name;
  std::string link;         // table name, may be empty
  std::string orientation;  // metadata only, e.g. "{0,1}"
  std::vector<std::string> tags;
  std::string diagram_text;  // native diagram format
  std::optional<Laurent> expected_bracket;
  std::optional<ExpectedDifference> expected_difference;
  std::string source;
  std::size_t line = 0;

  bool has_tag(std::string_view tag) const;
  TiedDiagram diagram() const;
};

/// Records are blocks of "key: value" lines separated by blank lines.
/// Throws CatalogError.
std::vector<FixtureEntry> parse_catalog(std::string_view text);

/// The catalog compiled into the library.
const std::vector<FixtureEntry>& load_catalog();
std::vector<FixtureEntry> load_catalog(const std::string& path);

/// Exact fixture name first, then the first entry for that link.
const FixtureEntry* find_fixture(const std::vector<FixtureEntry>& catalog, std::string_view name);

}  // namespace tiedbracket
