#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "eccspec/graph.hpp"
#include "eccspec/int_matrix.hpp"
#include "eccspec/integer.hpp"

namespace oracle {

using eccspec::Graph;
using eccspec::IntMatrix;
using eccspec::Integer;
using eccspec::Rational;

inline constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) d[u][v] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

// Straight from the definition, via Floyd-Warshall.
inline IntMatrix ecc_matrix(const Graph& g) {
  const int n = g.order();
  const auto d = floyd_warshall(g);
  std::vector<int> ecc(n, 0);
  for (int u = 0; u < n; ++u) ecc[u] = *std::max_element(d[u].begin(), d[u].end());
  IntMatrix m(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && d[u][v] == std::min(ecc[u], ecc[v])) m(u, v) = d[u][v];
    }
  }
  return m;
}

inline std::size_t rank(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      const Rational f = a[i][col] / a[r][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline Integer leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Faddeev-LeVerrier; ascending coefficients of det(xI - m).
inline std::vector<Integer> charpoly(const IntMatrix& m) {
  const std::size_t n = m.size();
  using Mat = std::vector<std::vector<Rational>>;
  auto mul = [n](const Mat& x, const Mat& y) {
    Mat z(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
      }
    }
    return z;
  };
  Mat a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Mat mk(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat t = mul(a, mk);
    for (std::size_t i = 0; i < n; ++i) t[i][i] += c[n - k + 1];
    mk = t;
    Mat am = mul(a, mk);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  std::vector<Integer> out;
  for (const auto& x : c) out.push_back(x.get_num());
  return out;
}

inline std::string adjacency_bits(const Graph& g, const std::vector<int>& perm) {
  // Position p holds original vertex inv[p].
  const int n = g.order();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[perm[v]] = v;
  std::string bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits += g.adjacent(inv[i], inv[j]) ? '1' : '0';
  }
  return bits;
}

// Lexicographically smallest adjacency string over all relabelings.
inline std::string brute_canonical(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string bits = adjacency_bits(g, perm);
    if (first || bits < best) best = bits;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::size_t automorphism_count(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    count += g.relabeled(perm) == g;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline Graph graph_from_mask(int n, unsigned long mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (mask & (1UL << bit)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline bool connected(const Graph& g) {
  const auto d = floyd_warshall(g);
  for (const auto& row : d) {
    for (int x : row) {
      if (x >= kInf) return false;
    }
  }
  return true;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const long v = dist(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

}  // namespace oracle
