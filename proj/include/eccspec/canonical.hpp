#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eccspec/graph.hpp"

namespace eccspec {

inline constexpr int kMaxCanonicalOrder = 16;

// Exact canonical labeling: equitable partition refinement, then a search
// over individualizations of the first smallest non-singleton cell; the leaf
// whose relabelled adjacency bit string (graph6 bit order) is smallest wins.
// Branches that differ by swapping twin vertices are skipped, since the
// swap is an automorphism fixing the current search node.
struct CanonicalForm {
  std::string graph6;
  std::uint64_t hash = 0;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Throws std::invalid_argument when the order exceeds kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

// Form of a graph already in canonical labeling (e.g. from graph_from_key).
CanonicalForm form_of_canonical_graph(const Graph& canonical);

// perm[v] is the canonical position of vertex v.
std::vector<int> canonical_labeling(const Graph& g);

// Upper-triangle adjacency bits in graph6 order, first pair most significant.
// Two graphs of the same order n <= 11 are isomorphic iff their canonical
// keys are equal.
std::uint64_t canonical_key(const Graph& g);
Graph graph_from_key(int n, std::uint64_t key);

}  // namespace eccspec
