#pragma once

#include <cstddef>
#include <string>

#include "eccspec/int_matrix.hpp"
#include "eccspec/integer.hpp"
#include "eccspec/polynomial.hpp"

namespace eccspec {

// Rank over Q by fraction-free (Bareiss) elimination with full pivoting.
// Pivot choice: first nonzero entry in row-major order of the active block.
std::size_t bareiss_rank(const IntMatrix& m);

Integer determinant(const IntMatrix& m);

// det(lambda*I - m), computed division-free (Berkowitz).
IntPolynomial berkowitz_charpoly(const IntMatrix& m);

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;

  std::size_t size() const { return n_plus + n_zero + n_minus; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Eigenvalue counts of a symmetric matrix above / at / below the shift c,
// by exact LDL^T elimination of (m - cI) with 1x1 and 2x2 pivots.
// Throws std::invalid_argument on asymmetric input.
Inertia inertia_at(const IntMatrix& m, const Rational& c);

// Closed interval with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  std::string to_string() const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// 2^-20
Rational default_bracket_width();

// Interval containing xi_i(m), the i-th largest eigenvalue (1-based), of width
// at most `width`, found by bisection on inertia counts from Gershgorin bounds.
// Collapses to a point when the eigenvalue is certified to be an integer.
// Throws std::out_of_range unless 1 <= i <= n.
Interval eigenvalue_bracket(const IntMatrix& m, std::size_t i,
                            const Rational& width = default_bracket_width());

// Number of eigenvalues of symmetric m (with multiplicity) that equal x:
// n - rank(q*m - p*I) for x = p/q.
std::size_t eigenvalue_multiplicity(const IntMatrix& m, const Rational& x);

// Exact three-way comparison of xi_i(a) and xi_j(b) for symmetric matrices.
// Brackets are refined until disjoint; a persistent overlap is settled by
// testing for a common root of the characteristic polynomials inside it.
int compare_eigenvalues(const IntMatrix& a, std::size_t i, const IntMatrix& b,
                        std::size_t j);

}  // namespace eccspec
