#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace tutte {

using BigInt = mpz_class;

/// Sparse polynomial in Z[x, y].
///
/// Terms are kept sorted by x-degree descending, then y-degree descending.
/// That is also the lexicographic order with x > y, so the first stored
/// term is the leading term used by exact division. No stored coefficient
/// is zero, hence two polynomials are equal iff their term lists are equal.
///
/// Values are immutable: every operation returns a new polynomial.
class BivarPoly {
 public:
  struct Term {
    std::uint32_t x_deg = 0;
    std::uint32_t y_deg = 0;
    BigInt coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  BivarPoly() = default;
  BivarPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit BivarPoly(const BigInt& constant);

  /// Collects like terms, drops zeros and sorts. Input order is irrelevant.
  static BivarPoly from_terms(std::vector<Term> terms);
  static BivarPoly monomial(const BigInt& coeff, std::uint32_t x_deg,
                            std::uint32_t y_deg);
  static BivarPoly x();
  static BivarPoly y();

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of x^a y^b (zero when absent).
  BigInt coeff(std::uint32_t x_deg, std::uint32_t y_deg) const;
  std::uint32_t max_x_degree() const noexcept;
  std::uint32_t max_y_degree() const noexcept;

  BivarPoly pow(unsigned exponent) const;
  /// p(y, x).
  BivarPoly swap_xy() const;
  /// Exact value at an integer point.
  BigInt eval(const BigInt& x0, const BigInt& y0) const;

  /// Canonical text, e.g. "x^2 + 3*x*y - y + 1"; "0" for zero.
  std::string to_text() const;
  /// Accepts the canonical text plus common hand-written variants: implicit
  /// multiplication ("4x^2y"), braced exponents ("x^{14}"), repeated terms.
  static BivarPoly parse(std::string_view text);

  /// [[a, b, "coeff"], ...] in canonical order.
  nlohmann::json to_json() const;
  static BivarPoly from_json(const nlohmann::json& j);

  friend BivarPoly operator+(const BivarPoly& p, const BivarPoly& q);
  friend BivarPoly operator-(const BivarPoly& p, const BivarPoly& q);
  friend BivarPoly operator-(const BivarPoly& p);
  friend BivarPoly operator*(const BivarPoly& p, const BivarPoly& q);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  std::vector<Term> terms_;
};

/// Quotient q with p == q * d, by long division in lex order x > y.
/// Throws NotDivisible when the remainder is nonzero or when the leading
/// coefficient of d does not divide a leading coefficient met on the way.
BivarPoly div_exact(const BivarPoly& p, const BivarPoly& d);

/// xy - x - y, the denominator of every splitting formula.
const BivarPoly& split_denominator();

std::ostream& operator<<(std::ostream& os, const BivarPoly& p);

}  // namespace tutte
