#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eccspec {

using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

// Immutable simple undirected graph on vertices 0..n-1; row v is the
// neighbourhood bitset of v. Builders return new graphs.
class Graph {
 public:
  // Empty graph nK1. Throws std::invalid_argument unless 1 <= n <= 64.
  explicit Graph(int n);
  // Throws std::invalid_argument on self-loops or out-of-range endpoints.
  // Duplicate edges are merged.
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  // Throws std::invalid_argument unless rows describe a symmetric loopless relation.
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighbors(int v) const { return neighbors(v) | bit(v); }
  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  int degree(int v) const;
  int max_degree() const;
  std::size_t edge_count() const;
  VertexSet all_vertices() const;
  std::vector<std::pair<int, int>> edges() const;
  const std::vector<VertexSet>& rows() const { return rows_; }

  Graph complement() const;
  // Induced subgraph on the listed vertices, relabelled in list order.
  Graph induced(std::span<const int> vertices) const;
  // Relabel: vertex v becomes perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

  static constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

 private:
  Graph() = default;
  std::vector<VertexSet> rows_;
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// All-pairs hop distances and eccentricity data. On disconnected input the
// unreachable pairs, the affected eccentricities and the diameter hold
// kUnreachable, and levels is empty.
struct Metrics {
  int n = 0;
  std::vector<int> dist;  // row-major n x n
  std::vector<int> ecc;
  int diam = 0;
  // levels[i - 1] lists V_i = {v : ecc(v) = i} in increasing vertex order.
  std::vector<std::vector<int>> levels;

  int distance(int u, int v) const {
    return dist[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(v)];
  }
  bool connected() const { return diam != kUnreachable; }
  // |V_i|, zero when the level is empty or absent.
  std::size_t level_size(int i) const;
};

Metrics bfs_metrics(const Graph& g);
bool is_connected(const Graph& g);

Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Vertices grouped part by part; edges exactly between distinct parts.
// Throws std::invalid_argument with fewer than two parts or a non-positive part.
Graph complete_multipartite(std::span<const int> parts);

// S(t0, -p, t1..tq): a clique K_t0 joined to an independent cell of size p
// and clique cells of sizes ts; the non-centre cells are pairwise
// non-adjacent. Vertex order: centre, independent cell, clique cells.
// Throws std::invalid_argument if t0 < 1, p < 0, some t_i < 2, or there
// is no cell besides the centre.
Graph mixed_extension_star(int t0, int p, std::span<const int> ts);

enum class TwinKind { kDuplicate, kCoDuplicate };

struct TwinClass {
  std::vector<int> vertices;
  TwinKind kind;
};

// Maximal classes (size >= 2) of vertices sharing open neighbourhoods
// (duplicate) or closed neighbourhoods (co-duplicate), ordered by their
// smallest vertex.
std::vector<TwinClass> duplicate_classes(const Graph& g);

}  // namespace eccspec
