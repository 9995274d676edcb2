// Exact arithmetic in Z[A, A^-1, c].
#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace tiedbracket {

using Integer = boost::multiprecision::cpp_int;

/// One monomial coeff * A^a_exp * c^c_exp.  c_exp is never negative.
struct Term {
  int a_exp = 0;
  int c_exp = 0;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Canonical term order: decreasing A-exponent, then increasing c-exponent.
inline bool canonical_before(int a1, int c1, int a2, int c2) {
  return a1 != a2 ? a1 > a2 : c1 < c2;
}

class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Sparse bivariate Laurent polynomial with arbitrary-precision integer
/// coefficients.  Terms are kept in canonical order with no zero
/// coefficients, so structural equality is polynomial equality.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long long constant);  // NOLINT(google-explicit-constructor)
  explicit Laurent(Integer constant);

  static Laurent monomial(Integer coeff, int a_exp, int c_exp = 0);
  /// Builds from arbitrary (possibly repeated, unordered) terms.
  static Laurent from_terms(std::vector<Term> terms);

  static Laurent A() { return monomial(1, 1); }
  static Laurent A_inv() { return monomial(1, -1); }
  static Laurent c() { return monomial(1, 0, 1); }
  /// A + A^-1
  static Laurent delta();
  /// -A^2 - A^-2, the value of an extra circle of an existing color.
  static Laurent loop_value();

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool has_c() const;
  Integer coefficient(int a_exp, int c_exp = 0) const;

  /// Multiplies by A^shift.
  Laurent shifted(int shift) const;

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  Laurent operator-() const;

  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
  friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);
  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  void add_scaled(const Laurent& other, int sign);

  std::vector<Term> terms_;
};

Laurent pow(const Laurent& base, unsigned exponent);

/// Replaces every c by -A^2 - A^-2.  A ring homomorphism.
Laurent substitute_c_loop(const Laurent& p);

/// Grammar: terms joined by '+'/'-'; a term is an optional integer, an
/// optional A factor (A, A^n, A^-n), an optional '*', an optional c factor
/// (c, c^n), and an optional divisor "/A" or "/A^n".  "0" is the zero
/// polynomial.  Whitespace is ignored.
Laurent parse_poly(std::string_view text);

/// Canonical text, e.g. "-A^4 - A^2 - c - A^-2 - A^-4" or "3A^15*c^2".
std::string render_poly(const Laurent& p);

/// JSON form: array of [aExp, cExp, coeff] in canonical order.  Coefficients
/// that do not fit in 64 bits are emitted as decimal strings.
nlohmann::json poly_to_json(const Laurent& p);
Laurent poly_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const Laurent& p);

}  // namespace tiedbracket
