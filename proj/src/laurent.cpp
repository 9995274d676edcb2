#include "tiedbracket/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace tiedbracket {

Laurent::Laurent(long long constant) : Laurent(Integer(constant)) {}

Laurent::Laurent(Integer constant) {
  if (constant != 0) terms_.push_back(Term{0, 0, std::move(constant)});
}

Laurent Laurent::monomial(Integer coeff, int a_exp, int c_exp) {
  if (c_exp < 0) throw std::invalid_argument("negative c exponent");
  Laurent p;
  if (coeff != 0) p.terms_.push_back(Term{a_exp, c_exp, std::move(coeff)});
  return p;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.c_exp < 0) throw std::invalid_argument("negative c exponent");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return canonical_before(x.a_exp, x.c_exp, y.a_exp, y.c_exp);
  });
  Laurent p;
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().a_exp == t.a_exp &&
        p.terms_.back().c_exp == t.c_exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

Laurent Laurent::delta() { return A() + A_inv(); }

Laurent Laurent::loop_value() { return monomial(-1, 2) + monomial(-1, -2); }

bool Laurent::has_c() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.c_exp > 0; });
}

Integer Laurent::coefficient(int a_exp, int c_exp) const {
  for (const Term& t : terms_) {
    if (t.a_exp == a_exp && t.c_exp == c_exp) return t.coeff;
  }
  return 0;
}

Laurent Laurent::shifted(int shift) const {
  Laurent p = *this;
  for (Term& t : p.terms_) t.a_exp += shift;
  return p;
}

// Merge of two canonically ordered term lists.
void Laurent::add_scaled(const Laurent& other, int sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto lhs = terms_.begin();
  auto rhs = other.terms_.begin();
  while (lhs != terms_.end() || rhs != other.terms_.end()) {
    if (rhs == other.terms_.end() ||
        (lhs != terms_.end() &&
         canonical_before(lhs->a_exp, lhs->c_exp, rhs->a_exp, rhs->c_exp))) {
      out.push_back(std::move(*lhs++));
    } else if (lhs == terms_.end() ||
               canonical_before(rhs->a_exp, rhs->c_exp, lhs->a_exp, lhs->c_exp)) {
      out.push_back(*rhs);
      if (sign < 0) out.back().coeff = -out.back().coeff;
      ++rhs;
    } else {
      Integer sum = lhs->coeff;
      if (sign < 0) {
        sum -= rhs->coeff;
      } else {
        sum += rhs->coeff;
      }
      if (sum != 0) out.push_back(Term{lhs->a_exp, lhs->c_exp, std::move(sum)});
      ++lhs;
      ++rhs;
    }
  }
  terms_ = std::move(out);
}

Laurent& Laurent::operator+=(const Laurent& other) {
  add_scaled(other, 1);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  add_scaled(other, -1);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& other) {
  *this = *this * other;
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Term> products;
  products.reserve(lhs.size() * rhs.size());
  for (const Term& x : lhs.terms_) {
    for (const Term& y : rhs.terms_) {
      products.push_back(Term{x.a_exp + y.a_exp, x.c_exp + y.c_exp, x.coeff * y.coeff});
    }
  }
  return Laurent::from_terms(std::move(products));
}

Laurent pow(const Laurent& base, unsigned exponent) {
  Laurent result(1);
  Laurent square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

Laurent substitute_c_loop(const Laurent& p) {
  const Laurent loop = Laurent::loop_value();
  std::vector<Laurent> loop_powers{Laurent(1)};
  Laurent out;
  for (const Term& t : p.terms()) {
    while (loop_powers.size() <= static_cast<std::size_t>(t.c_exp)) {
      loop_powers.push_back(loop_powers.back() * loop);
    }
    out += Laurent::monomial(t.coeff, t.a_exp) * loop_powers[t.c_exp];
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
  }

  Laurent parse() {
    if (chars_.empty()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(parse_term(sign));
      first = false;
    }
    return Laurent::from_terms(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[pos_]; }
  bool is_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t offset = pos_ < offsets_.size() ? offsets_[pos_]
                                                : (offsets_.empty() ? 0 : offsets_.back() + 1);
    throw PolyParseError(what, offset);
  }

  Integer parse_digits() {
    if (!is_digit()) fail("expected digits");
    std::string digits;
    while (is_digit()) digits.push_back(chars_[pos_++]);
    return Integer(digits);
  }

  int parse_int_exponent(bool allow_negative) {
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') {
        if (!allow_negative) fail("negative c exponent");
        sign = -1;
      }
      ++pos_;
    }
    Integer value = parse_digits();
    if (value > std::numeric_limits<int>::max() / 2) fail("exponent out of range");
    return sign * value.convert_to<int>();
  }

  Term parse_term(int sign) {
    Term term{0, 0, Integer(sign)};
    bool any = false;
    if (is_digit()) {
      term.coeff *= parse_digits();
      any = true;
    }
    while (true) {
      if (any && peek() == '*') ++pos_;
      if (peek() == 'A') {
        ++pos_;
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          e = parse_int_exponent(true);
        }
        term.a_exp += e;
        any = true;
      } else if (peek() == 'c') {
        ++pos_;
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          e = parse_int_exponent(false);
        }
        term.c_exp += e;
        any = true;
      } else {
        break;
      }
    }
    if (!any) fail("malformed term");
    if (peek() == '/') {
      ++pos_;
      if (peek() != 'A') fail("only A may appear in a divisor");
      ++pos_;
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_int_exponent(false);
      }
      term.a_exp -= e;
    }
    if (!at_end() && peek() != '+' && peek() != '-') fail("malformed term");
    return term;
  }

  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t pos_ = 0;
};

}  // namespace

Laurent parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string render_poly(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const Integer magnitude = negative ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string body;
    if (magnitude != 1 || (t.a_exp == 0 && t.c_exp == 0)) body += magnitude.str();
    if (t.a_exp == 1) {
      body += "A";
    } else if (t.a_exp != 0) {
      body += "A^" + std::to_string(t.a_exp);
    }
    if (t.c_exp > 0) {
      if (!body.empty()) body += '*';
      body += t.c_exp == 1 ? "c" : "c^" + std::to_string(t.c_exp);
    }
    out << body;
  }
  return out.str();
}

nlohmann::json poly_to_json(const Laurent& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Term& t : p.terms()) {
    nlohmann::json coeff;
    if (t.coeff >= std::numeric_limits<std::int64_t>::min() &&
        t.coeff <= std::numeric_limits<std::int64_t>::max()) {
      coeff = t.coeff.convert_to<std::int64_t>();
    } else {
      coeff = t.coeff.str();
    }
    out.push_back(nlohmann::json::array({t.a_exp, t.c_exp, coeff}));
  }
  return out;
}

Laurent poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3) {
      throw std::invalid_argument("polynomial JSON entries must be [aExp, cExp, coeff]");
    }
    Integer coeff = entry[2].is_string() ? Integer(entry[2].get<std::string>())
                                         : Integer(entry[2].get<std::int64_t>());
    terms.push_back(Term{entry[0].get<int>(), entry[1].get<int>(), std::move(coeff)});
  }
  return Laurent::from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << render_poly(p); }

}  // namespace tiedbracket
