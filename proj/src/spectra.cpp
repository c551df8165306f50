#include "eccspec/spectra.hpp"

#include <algorithm>
#include <stdexcept>

namespace eccspec {

namespace {

Interval abs_interval(const Interval& x) {
  if (x.lo >= 0) return x;
  if (x.hi <= 0) return {-x.hi, -x.lo};
  return {Rational(0), std::max(Rational(-x.lo), x.hi)};
}

}  // namespace

EccMatrix ecc_matrix(const Graph& g) { return ecc_matrix(g, bfs_metrics(g)); }

EccMatrix ecc_matrix(const Graph& g, const Metrics& metrics) {
  if (!metrics.connected()) throw std::invalid_argument("eccentricity matrix needs a connected graph");
  const int n = g.order();
  IntMatrix m(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int d = metrics.distance(u, v);
      if (d == std::min(metrics.ecc[static_cast<std::size_t>(u)], metrics.ecc[static_cast<std::size_t>(v)])) {
        m(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = d;
        m(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = d;
      }
    }
  }
  return {g, std::move(m)};
}

std::size_t multiplicity(const EccMatrix& e, const Rational& xi) {
  return eigenvalue_multiplicity(e.m, xi);
}

std::size_t multiplicity(const Graph& g, const Rational& xi) { return multiplicity(ecc_matrix(g), xi); }

IntPolynomial acharpoly(const Graph& g) { return berkowitz_charpoly(ecc_matrix(g).m); }

bool is_irreducible(const EccMatrix& e) {
  const std::size_t n = e.m.size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && e.m(u, v) != 0) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

std::pair<std::size_t, std::size_t> median_positions(std::size_t n) {
  return {(n + 1) / 2, (n + 2) / 2};
}

MedianCheck median_eigenvalue_is(const Graph& g, const Rational& xi) {
  const Inertia in = inertia_at(ecc_matrix(g).m, xi);
  const auto [h, l] = median_positions(static_cast<std::size_t>(g.order()));
  auto at = [&](std::size_t pos) { return in.n_plus < pos && pos <= in.n_plus + in.n_zero; };
  return {at(h), at(l)};
}

Interval hl_index(const Graph& g) {
  const IntMatrix m = ecc_matrix(g).m;
  const auto [h, l] = median_positions(m.size());
  const Interval a = abs_interval(eigenvalue_bracket(m, h));
  const Interval b = h == l ? a : abs_interval(eigenvalue_bracket(m, l));
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

std::vector<TwinPrediction> lemma_gx_predictions(const Graph& g) {
  const Metrics metrics = bfs_metrics(g);
  if (!metrics.connected()) throw std::invalid_argument("twin predictions need a connected graph");
  std::vector<TwinPrediction> out;
  for (const auto& cls : duplicate_classes(g)) {
    const int e = metrics.ecc[static_cast<std::size_t>(cls.vertices.front())];
    long xi = 0;
    if (cls.kind == TwinKind::kDuplicate && e == 2) xi = -2;
    if (cls.kind == TwinKind::kCoDuplicate && e == 1) xi = -1;
    out.push_back({Rational(xi), cls.vertices.size() - 1});
  }
  return out;
}

SpectrumSummary summarize_spectrum(const Graph& g, const std::vector<Rational>& xis) {
  const EccMatrix e = ecc_matrix(g);
  SpectrumSummary out;
  out.charpoly = berkowitz_charpoly(e.m);
  for (const auto& xi : xis) out.mult_table[xi] = multiplicity(e, xi);
  const auto [h, l] = median_positions(e.m.size());
  out.median_h = eigenvalue_bracket(e.m, h);
  out.median_l = h == l ? out.median_h : eigenvalue_bracket(e.m, l);
  const Interval a = abs_interval(out.median_h);
  const Interval b = abs_interval(out.median_l);
  out.hl_index = {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
  return out;
}

}  // namespace eccspec
