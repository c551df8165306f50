#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "eccspec/graph.hpp"
#include "eccspec/int_matrix.hpp"
#include "eccspec/integer.hpp"
#include "eccspec/linalg.hpp"
#include "eccspec/polynomial.hpp"

namespace eccspec {

// Eccentricity matrix: entry (u, v) is d(u, v) when d(u, v) equals
// min(ecc(u), ecc(v)) and 0 otherwise.
struct EccMatrix {
  Graph base;
  IntMatrix m;
};

// Throws std::invalid_argument on disconnected input.
EccMatrix ecc_matrix(const Graph& g);
EccMatrix ecc_matrix(const Graph& g, const Metrics& metrics);

// m(xi) = n - rank(q*A - p*I) for xi = p/q.
std::size_t multiplicity(const Graph& g, const Rational& xi);
std::size_t multiplicity(const EccMatrix& e, const Rational& xi);

IntPolynomial acharpoly(const Graph& g);

// True iff the support graph of the matrix (u ~ v when entry != 0) is connected.
bool is_irreducible(const EccMatrix& e);

// Median positions H = floor((n+1)/2), L = ceil((n+1)/2).
std::pair<std::size_t, std::size_t> median_positions(std::size_t n);

struct MedianCheck {
  bool at_h = false;
  bool at_l = false;
};
MedianCheck median_eigenvalue_is(const Graph& g, const Rational& xi);

// Enclosure of R = max(|xi_H|, |xi_L|); a point when both medians are
// certified exactly.
Interval hl_index(const Graph& g);

struct TwinPrediction {
  Rational xi;
  std::size_t lower_bound;
};
// One prediction per duplicate/co-duplicate class of size k:
// duplicate with ecc 2 -> -2, duplicate otherwise -> 0,
// co-duplicate with ecc 1 -> -1, co-duplicate otherwise -> 0; bound k - 1.
std::vector<TwinPrediction> lemma_gx_predictions(const Graph& g);

struct SpectrumSummary {
  IntPolynomial charpoly;
  std::map<Rational, std::size_t> mult_table;
  Interval median_h;
  Interval median_l;
  Interval hl_index;
};
SpectrumSummary summarize_spectrum(const Graph& g, const std::vector<Rational>& xis);

}  // namespace eccspec
