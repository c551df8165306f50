#include "eccspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace eccspec {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph order must be in 1..64, got " + std::to_string(n));
  }
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[static_cast<std::size_t>(u)] |= bit(v);
    rows_[static_cast<std::size_t>(v)] |= bit(u);
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet mask = n == 64 ? ~VertexSet{0} : (bit(n) - 1);
  for (int v = 0; v < n; ++v) {
    const VertexSet row = rows[static_cast<std::size_t>(v)];
    if (row & ~mask) throw std::invalid_argument("adjacency row " + std::to_string(v) + " out of range");
    if (row & bit(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    for (VertexSet rest = row; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (!((rows[static_cast<std::size_t>(u)] >> v) & 1U)) {
        throw std::invalid_argument("adjacency is not symmetric at (" + std::to_string(v) + ", " +
                                    std::to_string(u) + ")");
      }
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet row : rows_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

VertexSet Graph::all_vertices() const {
  return order() == 64 ? ~VertexSet{0} : (bit(order()) - 1);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (int v = u + 1; v < order(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  std::vector<VertexSet> rows(rows_.size());
  const VertexSet all = all_vertices();
  for (int v = 0; v < order(); ++v) rows[static_cast<std::size_t>(v)] = all & ~closed_neighbors(v);
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  check_order(k);
  std::vector<VertexSet> rows(vertices.size(), 0);
  for (int a = 0; a < k; ++a) {
    check_vertex(order(), vertices[static_cast<std::size_t>(a)]);
    for (int b = 0; b < k; ++b) {
      if (a != b && adjacent(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)])) {
        rows[static_cast<std::size_t>(a)] |= bit(b);
      }
    }
  }
  return from_rows(std::move(rows));
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw std::invalid_argument("relabeled: permutation size mismatch");
  std::vector<VertexSet> rows(rows_.size(), 0);
  VertexSet seen = 0;
  for (int v = 0; v < order(); ++v) {
    const int pv = perm[static_cast<std::size_t>(v)];
    check_vertex(order(), pv);
    if (seen & bit(pv)) throw std::invalid_argument("relabeled: not a permutation");
    seen |= bit(pv);
    for (VertexSet rest = neighbors(v); rest; rest &= rest - 1) {
      rows[static_cast<std::size_t>(pv)] |= bit(perm[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

std::size_t Metrics::level_size(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > levels.size()) return 0;
  return levels[static_cast<std::size_t>(i - 1)].size();
}

Metrics bfs_metrics(const Graph& g) {
  const int n = g.order();
  Metrics m;
  m.n = n;
  m.dist.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable);
  m.ecc.assign(static_cast<std::size_t>(n), 0);
  const VertexSet all = g.all_vertices();
  bool connected = true;
  for (int s = 0; s < n; ++s) {
    int* row = &m.dist[static_cast<std::size_t>(s) * static_cast<std::size_t>(n)];
    VertexSet seen = Graph::bit(s);
    VertexSet frontier = seen;
    int depth = 0;
    row[s] = 0;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      next &= ~seen;
      if (!next) break;
      ++depth;
      for (VertexSet f = next; f; f &= f - 1) row[std::countr_zero(f)] = depth;
      seen |= next;
      frontier = next;
    }
    if (seen != all) {
      connected = false;
      m.ecc[static_cast<std::size_t>(s)] = kUnreachable;
    } else {
      m.ecc[static_cast<std::size_t>(s)] = depth;
    }
  }
  if (!connected) {
    m.diam = kUnreachable;
    return m;
  }
  m.diam = *std::max_element(m.ecc.begin(), m.ecc.end());
  // K1 (diameter 0) has no levels.
  m.levels.assign(static_cast<std::size_t>(m.diam), {});
  for (int v = 0; v < n; ++v) {
    const int e = m.ecc[static_cast<std::size_t>(v)];
    if (e >= 1) m.levels[static_cast<std::size_t>(e - 1)].push_back(v);
  }
  return m;
}

bool is_connected(const Graph& g) {
  VertexSet seen = 1;
  VertexSet frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  check_order(a + b);
  std::vector<VertexSet> rows(static_cast<std::size_t>(a + b), 0);
  for (int v = 0; v < a; ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v);
  for (int v = 0; v < b; ++v) rows[static_cast<std::size_t>(a + v)] = h.neighbors(v) << a;
  return Graph::from_rows(std::move(rows));
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  check_order(a + b);
  const VertexSet left = g.all_vertices();
  const VertexSet right = h.all_vertices() << a;
  std::vector<VertexSet> rows(static_cast<std::size_t>(a + b), 0);
  for (int v = 0; v < a; ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v) | right;
  for (int v = 0; v < b; ++v) rows[static_cast<std::size_t>(a + v)] = (h.neighbors(v) << a) | left;
  return Graph::from_rows(std::move(rows));
}

Graph complete_graph(int n) { return Graph(n).complement(); }

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.size() < 2) throw std::invalid_argument("complete multipartite graph needs at least 2 parts");
  for (int part : parts) {
    if (part < 1) throw std::invalid_argument("part sizes must be positive");
  }
  Graph g = empty_graph(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = join(g, empty_graph(parts[i]));
  return g;
}

Graph mixed_extension_star(int t0, int p, std::span<const int> ts) {
  if (t0 < 1) throw std::invalid_argument("mixed extension: centre clique size t0 must be >= 1");
  if (p < 0) throw std::invalid_argument("mixed extension: independent cell size must be >= 0");
  for (int t : ts) {
    if (t < 2) throw std::invalid_argument("mixed extension: clique cell sizes must be >= 2, got " + std::to_string(t));
  }
  if (p == 0 && ts.empty()) throw std::invalid_argument("mixed extension: needs a cell besides the centre");
  std::optional<Graph> leaves;
  auto add = [&](const Graph& cell) { leaves = leaves ? disjoint_union(*leaves, cell) : cell; };
  if (p > 0) add(empty_graph(p));
  for (int t : ts) add(complete_graph(t));
  return join(complete_graph(t0), *leaves);
}

std::vector<TwinClass> duplicate_classes(const Graph& g) {
  std::map<VertexSet, std::vector<int>> open;
  std::map<VertexSet, std::vector<int>> closed;
  for (int v = 0; v < g.order(); ++v) {
    open[g.neighbors(v)].push_back(v);
    closed[g.closed_neighbors(v)].push_back(v);
  }
  std::vector<TwinClass> out;
  for (auto& [key, members] : open) {
    if (members.size() >= 2) out.push_back({std::move(members), TwinKind::kDuplicate});
  }
  for (auto& [key, members] : closed) {
    if (members.size() >= 2) out.push_back({std::move(members), TwinKind::kCoDuplicate});
  }
  std::sort(out.begin(), out.end(),
            [](const TwinClass& a, const TwinClass& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

}  // namespace eccspec
