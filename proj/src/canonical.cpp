#include "eccspec/canonical.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "eccspec/graph_io.hpp"

namespace eccspec {

namespace {

using Key = unsigned __int128;

constexpr int kCap = kMaxCanonicalOrder;

// Ordered partition of the vertex set into cells (bitsets).
struct Partition {
  std::array<VertexSet, kCap> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

class Labeler {
 public:
  explicit Labeler(const Graph& g) : g_(g), n_(g.order()) {
    for (int u = 0; u < n_; ++u) {
      VertexSet tw = 0;
      for (int w = 0; w < n_; ++w) {
        if (w == u) continue;
        if ((g.neighbors(u) & ~Graph::bit(w)) == (g.neighbors(w) & ~Graph::bit(u))) tw |= Graph::bit(w);
      }
      twins_[static_cast<std::size_t>(u)] = tw;
    }
  }

  void run() {
    Partition p;
    p.cells[0] = g_.all_vertices();
    p.count = 1;
    std::array<VertexSet, 2 * kCap> queue{};
    queue[0] = p.cells[0];
    refine(p, queue, 1);
    search(p);
  }

  const std::array<int, kCap>& best_lab() const { return best_lab_; }
  Key best_key() const { return best_key_; }

 private:
  // Splits cells by neighbour counts into each queued splitter until the
  // partition is equitable. Fragments are ordered by increasing count.
  void refine(Partition& p, std::array<VertexSet, 2 * kCap>& queue, int queued) const {
    int head = 0;
    while (head < queued) {
      const VertexSet w = queue[static_cast<std::size_t>(head++)];
      for (int c = 0; c < p.count; ++c) {
        const VertexSet cell = p.cells[static_cast<std::size_t>(c)];
        if (std::has_single_bit(cell)) continue;
        std::array<VertexSet, kCap + 1> bucket{};
        int lo = kCap;
        int hi = -1;
        for (VertexSet rest = cell; rest; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          const int k = std::popcount(g_.neighbors(v) & w);
          bucket[static_cast<std::size_t>(k)] |= Graph::bit(v);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;
        int parts = 0;
        for (int k = lo; k <= hi; ++k) parts += bucket[static_cast<std::size_t>(k)] ? 1 : 0;
        for (int t = p.count - 1; t > c; --t) {
          p.cells[static_cast<std::size_t>(t + parts - 1)] = p.cells[static_cast<std::size_t>(t)];
        }
        int at = c;
        for (int k = lo; k <= hi; ++k) {
          const VertexSet frag = bucket[static_cast<std::size_t>(k)];
          if (!frag) continue;
          p.cells[static_cast<std::size_t>(at++)] = frag;
          queue[static_cast<std::size_t>(queued++)] = frag;
        }
        p.count += parts - 1;
        c += parts - 1;
      }
    }
  }

  Key leaf_key(const Partition& p, std::array<int, kCap>& lab) const {
    for (int i = 0; i < n_; ++i) lab[static_cast<std::size_t>(i)] = std::countr_zero(p.cells[static_cast<std::size_t>(i)]);
    Key key = 0;
    for (int j = 1; j < n_; ++j) {
      const VertexSet row = g_.neighbors(lab[static_cast<std::size_t>(j)]);
      for (int i = 0; i < j; ++i) key = (key << 1) | ((row >> lab[static_cast<std::size_t>(i)]) & 1U);
    }
    return key;
  }

  void search(const Partition& p) {
    if (p.discrete(n_)) {
      std::array<int, kCap> lab{};
      const Key key = leaf_key(p, lab);
      if (!have_best_ || key < best_key_) {
        best_key_ = key;
        best_lab_ = lab;
        have_best_ = true;
      }
      return;
    }
    int target = -1;
    int target_size = kCap + 1;
    for (int c = 0; c < p.count; ++c) {
      const int size = std::popcount(p.cells[static_cast<std::size_t>(c)]);
      if (size > 1 && size < target_size) {
        target = c;
        target_size = size;
      }
    }
    const VertexSet cell = p.cells[static_cast<std::size_t>(target)];
    VertexSet covered = 0;
    for (VertexSet rest = cell; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (covered & Graph::bit(v)) continue;
      covered |= twins_[static_cast<std::size_t>(v)] | Graph::bit(v);
      Partition child;
      child.count = p.count + 1;
      for (int c = 0; c < target; ++c) child.cells[static_cast<std::size_t>(c)] = p.cells[static_cast<std::size_t>(c)];
      child.cells[static_cast<std::size_t>(target)] = Graph::bit(v);
      child.cells[static_cast<std::size_t>(target + 1)] = cell & ~Graph::bit(v);
      for (int c = target + 1; c < p.count; ++c) child.cells[static_cast<std::size_t>(c + 1)] = p.cells[static_cast<std::size_t>(c)];
      std::array<VertexSet, 2 * kCap> queue{};
      queue[0] = Graph::bit(v);
      refine(child, queue, 1);
      search(child);
    }
  }

  const Graph& g_;
  int n_;
  std::array<VertexSet, kCap> twins_{};
  std::array<int, kCap> best_lab_{};
  Key best_key_ = 0;
  bool have_best_ = false;
};

void check_canonical_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical labeling supports at most " + std::to_string(kMaxCanonicalOrder) +
                                " vertices, got " + std::to_string(g.order()));
  }
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  check_canonical_order(g);
  Labeler labeler(g);
  labeler.run();
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) perm[static_cast<std::size_t>(labeler.best_lab()[static_cast<std::size_t>(i)])] = i;
  return perm;
}

CanonicalForm canonical_form(const Graph& g) {
  const auto perm = canonical_labeling(g);
  return form_of_canonical_graph(g.relabeled(perm));
}

CanonicalForm form_of_canonical_graph(const Graph& canonical) {
  CanonicalForm out;
  out.graph6 = graph6_encode(canonical);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : out.graph6) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  out.hash = h;
  return out;
}

std::uint64_t canonical_key(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("canonical_key supports at most 11 vertices");
  Labeler labeler(g);
  labeler.run();
  return static_cast<std::uint64_t>(labeler.best_key());
}

Graph graph_from_key(int n, std::uint64_t key) {
  if (n < 1 || n > 11) throw std::invalid_argument("graph_from_key supports orders 1..11");
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((key >> bit) & 1U) {
        rows[static_cast<std::size_t>(i)] |= Graph::bit(j);
        rows[static_cast<std::size_t>(j)] |= Graph::bit(i);
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace eccspec
