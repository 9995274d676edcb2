// Text formats for diagrams.
//
//   pd: X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]
//   loops: 1 2
//   colors: 1
//
// Lines may also be separated by ';'.  '#' starts a comment.  colors lists
// the color of each crossing component in components() order and defaults
// to all 1.  Input starting with "PD[" is read as a table-style PD code.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tiedbracket/diagram.hpp"

namespace tiedbracket {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Returns a validated, color-normalized diagram.  Throws ParseError or
/// DiagramError.
TiedDiagram parse_diagram(std::string_view text);

std::string render_diagram(const TiedDiagram& d);

/// "PD[X[a,b,c,d], ...]" to the native "pd: X[a,b,c,d] ..." line.
std::string ingest_linkinfo_pd(std::string_view text);

}  // namespace tiedbracket
