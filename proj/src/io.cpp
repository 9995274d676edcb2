#include "tiedbracket/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace tiedbracket {

namespace {

// Cursor over one logical line with 1-based positions for diagnostics.
class LineReader {
 public:
  LineReader(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  long long integer(bool allow_negative) {
    skip_space();
    const std::size_t start = pos_;
    if (allow_negative && pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    if (pos_ - digits > 9) {
      pos_ = start;
      fail("integer out of range");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_ + pos_);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

std::array<ArcId, 4> read_crossing(LineReader& in) {
  in.expect('X');
  in.expect('[');
  std::array<ArcId, 4> slots{};
  for (int s = 0; s < 4; ++s) {
    if (s > 0) in.expect(',');
    slots[s] = static_cast<ArcId>(in.integer(false));
  }
  in.expect(']');
  return slots;
}

std::vector<std::array<ArcId, 4>> read_table_pd(LineReader& in) {
  in.expect('P');
  in.expect('D');
  in.expect('[');
  std::vector<std::array<ArcId, 4>> crossings;
  if (in.accept(']')) return crossings;
  do {
    if (in.peek() != 'X') in.fail("expected X[...] inside PD[...]");
    crossings.push_back(read_crossing(in));
  } while (in.accept(','));
  in.expect(']');
  if (!in.done()) in.fail("unexpected text after PD[...]");
  return crossings;
}

std::string pd_line(const std::vector<std::array<ArcId, 4>>& crossings) {
  std::ostringstream out;
  out << "pd:";
  for (const auto& c : crossings) out << " X[" << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ']';
  return out.str();
}

struct Line {
  std::string_view text;
  std::size_t number;
  std::size_t column;  // of text[0]
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t column = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n' || text[i] == ';') {
      std::string_view body = text.substr(start, i - start);
      if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
      lines.push_back(Line{body, number, column});
      if (i < text.size() && text[i] == '\n') {
        ++number;
        column = 1;
      } else {
        column += i - start + 1;
      }
      start = i + 1;
    }
  }
  return lines;
}

}  // namespace

TiedDiagram parse_diagram(std::string_view text) {
  std::optional<std::vector<std::array<ArcId, 4>>> pd;
  std::optional<std::vector<Color>> loops;
  std::optional<std::vector<Color>> colors;

  for (const Line& line : split_lines(text)) {
    LineReader in(line.text, line.number, line.column);
    if (in.done()) continue;
    if (in.peek() == 'P') {
      if (pd) in.fail("duplicate pd");
      pd = read_table_pd(in);
      continue;
    }
    const std::size_t colon = line.text.find(':');
    if (colon == std::string_view::npos) in.fail("expected 'pd:', 'loops:' or 'colors:'");
    std::string key(line.text.substr(0, colon));
    key.erase(std::remove_if(key.begin(), key.end(), [](unsigned char ch) { return std::isspace(ch); }),
              key.end());
    LineReader body(line.text.substr(colon + 1), line.number, line.column + colon + 1);
    if (key == "pd") {
      if (pd) in.fail("duplicate pd");
      pd.emplace();
      while (!body.done()) pd->push_back(read_crossing(body));
    } else if (key == "loops" || key == "colors") {
      auto& target = key == "loops" ? loops : colors;
      if (target) in.fail("duplicate " + key);
      target.emplace();
      while (!body.done()) {
        const long long value = body.integer(true);
        if (value < 1) body.fail("colors must be positive");
        target->push_back(static_cast<Color>(value));
      }
    } else {
      in.fail("unknown key '" + key + "'");
    }
  }

  std::vector<std::array<ArcId, 4>> crossings = pd.value_or(std::vector<std::array<ArcId, 4>>{});
  std::vector<CrossingRecord> records;
  TiedDiagram::ArcColors ones;
  for (const auto& c : crossings) {
    records.push_back(CrossingRecord{c, 0});
    for (ArcId a : c) ones.emplace_back(a, 1);
  }
  // Arc multiplicities are checked before components are traced.
  const TiedDiagram shape(std::move(records), std::move(ones), loops.value_or(std::vector<Color>{}));
  validate(shape);
  std::vector<Color> component_colors =
      colors.value_or(std::vector<Color>(component_count(shape) - shape.free_loops().size(), 1));
  TiedDiagram d = TiedDiagram::from_component_colors(std::move(crossings), component_colors,
                                                     loops.value_or(std::vector<Color>{}));
  validate(d);
  return d.normalized();
}

std::string render_diagram(const TiedDiagram& d) {
  std::ostringstream out;
  std::vector<std::array<ArcId, 4>> slots;
  for (const auto& c : d.crossings()) slots.push_back(c.slots);
  bool any = false;
  if (!slots.empty()) {
    out << pd_line(slots) << '\n';
    out << "colors:";
    for (const auto& comp : components(d)) {
      if (!comp.free_loop) out << ' ' << comp.color;
    }
    out << '\n';
    any = true;
  }
  if (!d.free_loops().empty() || !any) {
    out << "loops:";
    for (Color c : d.free_loops()) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

std::string ingest_linkinfo_pd(std::string_view text) {
  LineReader in(text, 1, 1);
  if (in.peek() != 'P') in.fail("expected PD[...]");
  return pd_line(read_table_pd(in));
}

}  // namespace tiedbracket
