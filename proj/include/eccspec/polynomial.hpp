#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "eccspec/integer.hpp"

namespace eccspec {

// Univariate polynomial over Z in the variable lambda, ascending coefficients.
// Normalized: no zero leading coefficient; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(std::size_t degree, const Integer& c = 1);
  // lambda - root
  static IntPolynomial linear_factor(const Integer& root);
  // Parses "c_n,...,c_0" (descending, as printed by to_descending_csv()).
  static IntPolynomial from_descending_csv(const std::string& text);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  // Coefficient of lambda^k (zero beyond the degree).
  Integer coefficient(std::size_t k) const;
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;

  IntPolynomial pow(unsigned exponent) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  std::string to_ascending_csv() const;
  std::string to_descending_csv() const;
  // Human-readable form, e.g. "x^4 - 17x^2 + 16".
  std::string to_pretty(char var = 'x') const;

  // FNV-1a over the decimal coefficient list; stable across runs and platforms.
  std::uint64_t digest() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

// Exact division over Z. Returns std::nullopt (NotDivisible) when the
// remainder is nonzero or the quotient would leave Z. Throws
// std::invalid_argument on a zero divisor.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& num,
                                          const IntPolynomial& den);

// Largest k such that (q*lambda - p)^k divides poly, where root = p/q in
// lowest terms. Throws std::invalid_argument for the zero polynomial.
unsigned root_multiplicity(const IntPolynomial& poly, const Rational& root);

// Polynomial over Q, ascending coefficients, normalized.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> ascending);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  Rational evaluate(const Rational& x) const;

  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;
  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  RatPolynomial scaled(const Rational& c) const;

  std::string to_pretty(char var = 'n') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

struct InterpolationPoint {
  Rational x;
  Rational y;
};

// Unique polynomial of degree < points.size() through all points.
// Throws std::invalid_argument on duplicate abscissae or an empty input.
RatPolynomial lagrange_interpolate(const std::vector<InterpolationPoint>& points);

}  // namespace eccspec
