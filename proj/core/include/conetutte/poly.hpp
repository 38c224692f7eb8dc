#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conetutte/error.hpp"

namespace conetutte {

// Coefficients are 128-bit and every arithmetic step is overflow-checked.
using Coeff = __int128;

namespace checked {

Coeff add(Coeff a, Coeff b);
Coeff sub(Coeff a, Coeff b);
Coeff mul(Coeff a, Coeff b);
Coeff neg(Coeff a);

}  // namespace checked

std::string to_string(Coeff c);
// Parses an optionally signed decimal integer. Throws ParseError.
Coeff parse_coeff(std::string_view text);
// Narrowing for serialization; throws OverflowError outside int64 range.
std::int64_t to_int64(Coeff c);

/// Univariate polynomial in y with exact integer coefficients.
///
/// Stored densely in ascending order; the coefficient vector is always
/// normalized (no trailing zeros), so the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> ascending);
  IntPolynomial(std::initializer_list<Coeff> ascending);
  template <std::integral T>
  IntPolynomial(std::initializer_list<T> ascending)
      : IntPolynomial(std::vector<Coeff>(ascending.begin(), ascending.end())) {}

  static IntPolynomial constant(Coeff c);
  // y^k
  static IntPolynomial monomial(std::size_t k, Coeff c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of y^i; zero past the degree.
  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::span<const Coeff> coeffs() const { return coeffs_; }
  Coeff leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  // Lexicographic on (degree, coefficients from the top); only used for
  // ordering containers, not the coefficientwise order.
  friend std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b);

  // Multiply by y^k.
  IntPolynomial shifted(std::size_t k) const;
  IntPolynomial scaled(Coeff c) const;

  // Horner evaluation at an integer point.
  Coeff eval_at(Coeff t) const;

  bool has_negative_coefficient() const;

  // "y^2+3y+4"; the zero polynomial prints as "0".
  std::string to_string() const;
  // Ascending coefficient list, e.g. "[4,3,1]".
  std::string to_json() const;
  std::vector<std::int64_t> to_int64_vector() const;

 private:
  void normalize();
  std::vector<Coeff> coeffs_;
};

// True iff every coefficient of q - p is non-negative.
bool coeffwise_leq(const IntPolynomial& p, const IntPolynomial& q);

// Returns q with q * divisor == dividend. Throws DivisionError when the
// remainder is nonzero and InvalidArgument for a zero divisor.
IntPolynomial exact_div(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// Bivariate polynomial in (x, y); sparse, keyed by (x-exponent, y-exponent).
/// Only the brute-force Tutte oracle produces these.
class BivarPolynomial {
 public:
  using Exponents = std::pair<int, int>;

  BivarPolynomial() = default;

  void add_term(int x_exp, int y_exp, Coeff c);
  Coeff coeff(int x_exp, int y_exp) const;
  const std::map<Exponents, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BivarPolynomial& operator+=(const BivarPolynomial& rhs);
  friend BivarPolynomial operator*(const BivarPolynomial& a, const BivarPolynomial& b);
  friend bool operator==(const BivarPolynomial&, const BivarPolynomial&) = default;

  // Substitute x = value, giving a polynomial in y.
  IntPolynomial at_x(Coeff value) const;
  Coeff eval(Coeff x, Coeff y) const;

  // Terms in descending (x, y) order, e.g. "x^2+x+y".
  std::string to_string() const;

 private:
  std::map<Exponents, Coeff> terms_;
};

}  // namespace conetutte
