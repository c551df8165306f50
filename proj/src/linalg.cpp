#include "eccspec/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eccspec {

namespace {

// Signals that the int64 fast path cannot represent an intermediate value.
struct Overflow {};

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(v);
}

// Arithmetic policies for the elimination kernels. The int64 policy computes
// every product in 128 bits and throws Overflow when a stored value would not
// fit, so a completed fast-path run is exact.
struct Int64Ops {
  using T = std::int64_t;
  static T from(const Integer& x) {
    if (!fits_int64(x)) throw Overflow{};
    return to_int64(x);
  }
  static Integer to_integer(T x) { return from_int64(x); }
  static bool is_zero(T x) { return x == 0; }
  // (a*b - c*d) / e, exact.
  static T cross_div(T a, T b, T c, T d, T e) {
    const i128 num = static_cast<i128>(a) * b - static_cast<i128>(c) * d;
    return narrow(num / e);
  }
  static T mul(T a, T b) { return narrow(static_cast<i128>(a) * b); }
  static T add(T a, T b) { return narrow(static_cast<i128>(a) + b); }
  static T neg(T a) { return narrow(-static_cast<i128>(a)); }
};

struct BigOps {
  using T = Integer;
  static T from(const Integer& x) { return x; }
  static Integer to_integer(const T& x) { return x; }
  static bool is_zero(const T& x) { return x == 0; }
  static T cross_div(const T& a, const T& b, const T& c, const T& d, const T& e) {
    T num = a * b - c * d;
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), e.get_mpz_t());
    return num;
  }
  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static T neg(const T& a) { return -a; }
};

template <typename Ops>
std::vector<typename Ops::T> load(const IntMatrix& m) {
  std::vector<typename Ops::T> a;
  a.reserve(m.entries().size());
  for (const auto& x : m.entries()) a.push_back(Ops::from(x));
  return a;
}

struct EliminationResult {
  std::size_t rank = 0;
  int sign = 1;
  Integer last_pivot = 1;
};

// Fraction-free Gaussian elimination with full pivoting. After step k the
// active entries are (k+1)-minors of the row/column-permuted input, so every
// division is exact.
template <typename Ops>
EliminationResult bareiss(const IntMatrix& m) {
  using T = typename Ops::T;
  const std::size_t n = m.size();
  std::vector<T> a = load<Ops>(m);
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
  T prev = Ops::from(Integer(1));
  EliminationResult res;
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = k; i < n && !pivot; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (!Ops::is_zero(at(i, j))) {
          pivot = {i, j};
          break;
        }
      }
    }
    if (!pivot) break;
    const auto [pi, pj] = *pivot;
    if (pi != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pi, j), at(k, j));
      res.sign = -res.sign;
    }
    if (pj != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, pj), at(i, k));
      res.sign = -res.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = Ops::cross_div(at(i, j), at(k, k), at(i, k), at(k, j), prev);
      }
      at(i, k) = Ops::from(Integer(0));
    }
    prev = at(k, k);
    ++res.rank;
  }
  res.last_pivot = Ops::to_integer(prev);
  return res;
}

EliminationResult eliminate(const IntMatrix& m) {
  try {
    return bareiss<Int64Ops>(m);
  } catch (const Overflow&) {
    return bareiss<BigOps>(m);
  }
}

// Berkowitz: p_r = Toeplitz(1, -a_rr, -R C, -R A C, ..., -R A^{r-2} C) p_{r-1}
// over the leading principal submatrices; coefficients kept in descending order.
template <typename Ops>
std::vector<Integer> berkowitz(const IntMatrix& m) {
  using T = typename Ops::T;
  const std::size_t n = m.size();
  const std::vector<T> a = load<Ops>(m);
  auto at = [&](std::size_t i, std::size_t j) -> const T& { return a[i * n + j]; };
  const T zero = Ops::from(Integer(0));
  std::vector<T> poly{Ops::from(Integer(1))};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t last = r - 1;
    std::vector<T> toeplitz(r + 1, zero);
    toeplitz[0] = Ops::from(Integer(1));
    toeplitz[1] = Ops::neg(at(last, last));
    // v = A_{r-1}^k C, starting from the column above the new diagonal entry.
    std::vector<T> v(last, zero);
    for (std::size_t i = 0; i < last; ++i) v[i] = at(i, last);
    for (std::size_t k = 2; k <= r; ++k) {
      T dot = zero;
      for (std::size_t j = 0; j < last; ++j) dot = Ops::add(dot, Ops::mul(at(last, j), v[j]));
      toeplitz[k] = Ops::neg(dot);
      if (k == r) break;
      std::vector<T> next(last, zero);
      for (std::size_t i = 0; i < last; ++i) {
        T acc = zero;
        for (std::size_t j = 0; j < last; ++j) acc = Ops::add(acc, Ops::mul(at(i, j), v[j]));
        next[i] = std::move(acc);
      }
      v = std::move(next);
    }
    std::vector<T> next_poly(r + 1, zero);
    for (std::size_t i = 0; i <= r; ++i) {
      T acc = zero;
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j) {
        acc = Ops::add(acc, Ops::mul(toeplitz[i - j], poly[j]));
      }
      next_poly[i] = std::move(acc);
    }
    poly = std::move(next_poly);
  }
  std::vector<Integer> ascending;
  ascending.reserve(poly.size());
  for (std::size_t k = poly.size(); k-- > 0;) ascending.push_back(Ops::to_integer(poly[k]));
  return ascending;
}

// Sign variations of the coefficient sequence of p(x + shift); for a
// real-rooted p this is the number of roots greater than shift.
std::size_t roots_above(const RatPolynomial& p, const Rational& shift) {
  std::vector<Rational> c = p.coefficients();
  const std::size_t d = c.size();
  // Taylor shift by repeated synthetic division.
  for (std::size_t i = 0; i + 1 < d; ++i) {
    for (std::size_t k = d - 1; k-- > i;) c[k] += shift * c[k + 1];
  }
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

RatPolynomial remainder(RatPolynomial a, const RatPolynomial& b) {
  std::vector<Rational> r = a.coefficients();
  const auto& d = b.coefficients();
  while (r.size() >= d.size() && !r.empty()) {
    const Rational c = r.back() / d.back();
    const std::size_t off = r.size() - d.size();
    for (std::size_t j = 0; j < d.size(); ++j) r[off + j] -= c * d[j];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return RatPolynomial(std::move(r));
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.coefficients().back());
}

// Bisection state for one eigenvalue: xi lies in the open interval (lo, hi)
// unless exact is set, in which case it equals lo = hi.
struct Bracket {
  Rational lo;
  Rational hi;
  bool exact = false;
};

class Bracketer {
 public:
  Bracketer(const IntMatrix& m, std::size_t i) : m_(m), i_(i) {
    if (!m.is_symmetric()) throw std::invalid_argument("eigenvalue bracket: matrix is not symmetric");
    if (i < 1 || i > m.size()) throw std::out_of_range("eigenvalue bracket: index out of range");
    const Integer r = m.max_abs_row_sum() + 1;
    b_.lo = Rational(-r);
    b_.hi = Rational(r);
  }

  const Bracket& refine(const Rational& width) {
    while (!b_.exact && b_.hi - b_.lo > width) {
      Rational mid = (b_.lo + b_.hi) / 2;
      if (probe(mid)) break;
    }
    certify_integer();
    return b_;
  }

  Interval interval() const { return {b_.lo, b_.hi}; }

 private:
  // True when xi is certified equal to c.
  bool probe(const Rational& c) {
    const Inertia in = inertia_at(m_, c);
    if (in.n_plus < i_ && i_ <= in.n_plus + in.n_zero) {
      b_ = {c, c, true};
      return true;
    }
    if (in.n_plus >= i_) {
      b_.lo = c;
    } else {
      b_.hi = c;
    }
    return false;
  }

  void certify_integer() {
    if (b_.exact || b_.hi - b_.lo >= 1) return;
    Integer k;
    mpz_cdiv_q(k.get_mpz_t(), b_.lo.get_num_mpz_t(), b_.lo.get_den_mpz_t());
    if (Rational(k) == b_.lo) k += 1;
    if (Rational(k) < b_.hi) probe(Rational(k));
  }

  const IntMatrix& m_;
  std::size_t i_;
  Bracket b_;
};

}  // namespace

std::size_t bareiss_rank(const IntMatrix& m) { return eliminate(m).rank; }

Integer determinant(const IntMatrix& m) {
  if (m.size() == 0) return 1;
  const EliminationResult res = eliminate(m);
  if (res.rank < m.size()) return 0;
  return res.sign * res.last_pivot;
}

IntPolynomial berkowitz_charpoly(const IntMatrix& m) {
  try {
    return IntPolynomial(berkowitz<Int64Ops>(m));
  } catch (const Overflow&) {
    return IntPolynomial(berkowitz<BigOps>(m));
  }
}

Inertia inertia_at(const IntMatrix& m, const Rational& c) {
  if (!m.is_symmetric()) throw std::invalid_argument("inertia_at: matrix is not symmetric");
  const std::size_t n = m.size();
  // q*m - p*I has the same inertia as m - cI for q > 0.
  const IntMatrix shifted = m.shifted(c.get_den(), c.get_num());
  std::vector<Rational> a;
  a.reserve(n * n);
  for (const auto& x : shifted.entries()) a.emplace_back(x);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  Inertia out;
  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(),
                             [&](std::size_t i) { return at(i, i) != 0; });
    if (diag != active.end()) {
      const std::size_t p = *diag;
      const Rational pivot = at(p, p);
      (pivot > 0 ? out.n_plus : out.n_minus) += 1;
      active.erase(diag);
      for (std::size_t u : active) {
        if (at(u, p) == 0) continue;
        const Rational f = at(u, p) / pivot;
        for (std::size_t v : active) at(u, v) -= f * at(p, v);
      }
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t x = 0; x < active.size() && !pair; ++x) {
      for (std::size_t y = x + 1; y < active.size(); ++y) {
        if (at(active[x], active[y]) != 0) {
          pair = {active[x], active[y]};
          break;
        }
      }
    }
    if (!pair) {
      out.n_zero += active.size();
      break;
    }
    // 2x2 pivot [[0, a], [a, 0]] contributes one positive and one negative eigenvalue.
    const auto [i, j] = *pair;
    const Rational inv = 1 / at(i, j);
    out.n_plus += 1;
    out.n_minus += 1;
    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](std::size_t v) { return v == i || v == j; }),
                 active.end());
    std::vector<Rational> ui, uj;
    for (std::size_t u : active) {
      ui.push_back(at(u, i) * inv);
      uj.push_back(at(u, j) * inv);
    }
    for (std::size_t x = 0; x < active.size(); ++x) {
      const std::size_t u = active[x];
      if (ui[x] == 0 && uj[x] == 0) continue;
      for (std::size_t v : active) at(u, v) -= ui[x] * at(j, v) + uj[x] * at(i, v);
    }
  }
  return out;
}

std::string Interval::to_string() const {
  if (is_point()) return lo.get_str();
  return "[" + lo.get_str() + ", " + hi.get_str() + "]";
}

Rational default_bracket_width() { return Rational(1, 1 << 20); }

Interval eigenvalue_bracket(const IntMatrix& m, std::size_t i, const Rational& width) {
  Bracketer b(m, i);
  b.refine(width);
  return b.interval();
}

std::size_t eigenvalue_multiplicity(const IntMatrix& m, const Rational& x) {
  return m.size() - bareiss_rank(m.shifted(x.get_den(), x.get_num()));
}

int compare_eigenvalues(const IntMatrix& a, std::size_t i, const IntMatrix& b, std::size_t j) {
  Bracketer ba(a, i);
  Bracketer bb(b, j);
  Rational width = default_bracket_width();
  const Rational tie_width(1, Integer(1) << 64);
  std::optional<RatPolynomial> common;
  for (;;) {
    const Bracket& x = ba.refine(width);
    const Bracket& y = bb.refine(width);
    if (x.exact && y.exact) return x.lo < y.lo ? -1 : (x.lo > y.lo ? 1 : 0);
    // Not both exact, so at least one end is open and touching ends separate.
    if (x.hi <= y.lo) return -1;
    if (y.hi <= x.lo) return 1;
    if (width < tie_width) {
      if (!common) common = gcd(to_rational(berkowitz_charpoly(a)), to_rational(berkowitz_charpoly(b)));
      const Rational lo = std::max(x.lo, y.lo);
      const Rational hi = std::min(x.hi, y.hi);
      if (common->degree() >= 1 &&
          (common->evaluate(lo) == 0 || roots_above(*common, lo) > roots_above(*common, hi))) {
        return 0;
      }
    }
    width /= 2;
  }
}

}  // namespace eccspec
