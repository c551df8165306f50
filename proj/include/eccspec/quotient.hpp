#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eccspec/graph.hpp"
#include "eccspec/int_matrix.hpp"
#include "eccspec/integer.hpp"

namespace eccspec {

// Block matrix with M_ij = s_ij J (i != j) and M_ii = s_ii J + p_i I.
struct BlockSpec {
  std::vector<int> sizes;             // n_1..n_l, each >= 1
  std::vector<std::vector<long>> s;   // l x l, symmetric
  std::vector<long> p;                // p_1..p_l

  std::size_t blocks() const { return sizes.size(); }
  std::size_t order() const;
  // Throws std::invalid_argument describing the first violation.
  void validate() const;

  // Compact text form "l; n1 .. nl; s11 s12 .. / s21 .. ; p1 .. pl".
  std::string to_string() const;
  static BlockSpec parse(std::string_view text);

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

struct QuotientResult {
  IntMatrix q;
  // (p_i, n_i - 1) for every block with n_i >= 2.
  std::vector<std::pair<Integer, std::size_t>> leftover;

  std::size_t leftover_size() const;
};

IntMatrix realize(const BlockSpec& spec);
QuotientResult quotient(const BlockSpec& spec);

// P(realize(spec)) == P(Q) * prod (lambda - p_i)^(n_i - 1), exactly.
bool verify_spectrum_identity(const BlockSpec& spec);

// For a connected graph with universal vertices, the block spec of its
// eccentricity matrix under the partition {universal vertices} + twin
// classes of the remaining vertices, or one singleton block per remaining
// vertex when that partition is not of J/I form. std::nullopt when there is
// no universal vertex (or the graph is disconnected). Block order follows
// the cell order; `cells` receives the vertices of each block.
std::optional<BlockSpec> detect_join_blockspec(
    const Graph& g, std::vector<std::vector<int>>* cells = nullptr);

}  // namespace eccspec
