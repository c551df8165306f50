#include "eccspec/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eccspec/canonical.hpp"
#include "eccspec/families.hpp"
#include "eccspec/graph_io.hpp"
#include "eccspec/linalg.hpp"
#include "eccspec/quotient.hpp"
#include "eccspec/spectra.hpp"

namespace eccspec {

namespace {

constexpr int kIfMaxOrder = 40;

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string join_ints(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join_strings(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out + "}";
}

std::vector<int> range_inclusive(int lo, int hi) {
  std::vector<int> out(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

// Counts cases of one property and keeps the first counterexample.
struct Tally {
  std::size_t total = 0;
  std::size_t good = 0;
  std::string first_failure;

  void record(bool pass, const std::function<std::string()>& describe) {
    ++total;
    if (pass) {
      ++good;
    } else if (first_failure.empty()) {
      first_failure = describe();
    }
  }

  void report_to(VerificationReport& report, const std::string& claim, const std::string& scope) const {
    report.add(claim, first_failure.empty() ? scope : scope + "; first failure: " + first_failure,
               std::to_string(total) + " of " + std::to_string(total), std::to_string(good) + " of " + std::to_string(total),
               good == total && total > 0);
  }
};

std::string matrix_text(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ' ';
      out += m(i, j).get_str();
    }
  }
  return out + "]";
}

IntMatrix random_symmetric(Rng& rng, std::size_t n, int lo, int hi) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const int v = uniform(rng, lo, hi);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

Graph random_connected_graph(Rng& rng, int n) {
  const double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
}

Graph random_tree(Rng& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(uniform(rng, 0, v - 1), v);
  return Graph(n, edges);
}

Graph grid_graph(int rows, int cols) {
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, edges);
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

int count_or(int requested, int fallback) { return requested > 0 ? requested : fallback; }

std::string part_name(TheoremPart part) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v"};
  return names[static_cast<int>(part) - 1];
}

int part_deficit(TheoremPart part) {
  switch (part) {
    case TheoremPart::kI: return 1;
    case TheoremPart::kII: return 2;
    case TheoremPart::kIII: return 3;
    case TheoremPart::kIV: return 4;
    case TheoremPart::kV: return 5;
  }
  return 0;
}

int part_min_order(TheoremPart part) {
  switch (part) {
    case TheoremPart::kI: return 2;
    case TheoremPart::kII: return 4;
    case TheoremPart::kIII: return 4;
    case TheoremPart::kIV: return 9;
    case TheoremPart::kV: return 16;
  }
  return 0;
}

std::vector<int> part_default_orders(TheoremPart part) {
  switch (part) {
    case TheoremPart::kI: return range_inclusive(2, 9);
    case TheoremPart::kII: return range_inclusive(4, 9);
    case TheoremPart::kIII: return range_inclusive(4, 9);
    case TheoremPart::kIV: return {9, 12, 20};
    case TheoremPart::kV: return {16, 20, 33};
  }
  return {};
}

std::string claim_text(TheoremPart part) {
  switch (part) {
    case TheoremPart::kI: return "m(-1) = n-1 iff G is K_n";
    case TheoremPart::kII: return "no connected graph has m(-1) = n-2";
    case TheoremPart::kIII: return "m(-1) = n-3 iff G is K_{n-2} v 2K1 or P4";
    case TheoremPart::kIV: return "m(-1) = n-4 iff G is K_{n-3} v (K2 u K1) or K_{n-3} v 3K1 (n >= 9)";
    case TheoremPart::kV: return "m(-1) = n-5 iff G is one of the ten listed joins (n >= 16)";
  }
  return {};
}

// ---- tables ---------------------------------------------------------------

struct Affine {
  long a;  // coefficient of n
  long b;
};

struct FixedFactor {
  IntPolynomial base;
  Affine exponent;
};

struct TableRow {
  std::string label;
  std::function<FamilyId(int)> id;
  std::vector<FixedFactor> factors;
  std::vector<Affine> remainder;  // descending powers of lambda
};

IntPolynomial lin(long c) { return IntPolynomial({c, 1}); }

std::vector<TableRow> table_rows() {
  const IntPolynomial plus1 = lin(1);
  const IntPolynomial plus2 = lin(2);
  const IntPolynomial lam = IntPolynomial({0, 1});
  const IntPolynomial golden = IntPolynomial({-4, 2, 1});
  auto g1 = [](int index) { return [index](int n) -> FamilyId { return family::G1Member{index, n}; }; };
  auto five = [](int index) { return [index](int n) -> FamilyId { return family::OrderFiveMember{index, n}; }; };
  auto join3 = [](SmallGraph h) { return [h](int n) -> FamilyId { return family::JoinCliqueWith{n - 3, h}; }; };
  return {
      {"K_{n-4} v 4K1", g1(0), {{plus1, {1, -5}}, {plus2, {0, 3}}}, {{0, 1}, {-1, -1}, {2, -14}}},
      {"K_{n-4} v (2K1 u K2)", g1(1), {{plus1, {1, -5}}, {plus2, {0, 1}}, {lam, {0, 1}}},
       {{0, 1}, {-1, 3}, {-2, -10}, {4, -32}}},
      {"K_{n-4} v (P3 u K1)", g1(2), {{plus1, {1, -5}}, {plus2, {0, 1}}},
       {{0, 1}, {-1, 3}, {-2, -6}, {4, -20}, {0, 8}}},
      {"K_{n-4} v 2K2", g1(3), {{plus1, {1, -5}}, {lam, {0, 2}}, {plus2, {0, 1}}}, {{0, 1}, {-1, 3}, {-2, 6}}},
      {"K_{n-4} v P4", g1(4), {{plus1, {1, -5}}},
       {{0, 1}, {-1, 5}, {-4, 4}, {0, -12}, {8, -16}, {0, 16}}},
      {"K_{n-4} v (K3 u K1)", g1(5), {{plus1, {1, -5}}, {lam, {0, 2}}}, {{0, 1}, {-1, 5}, {-4, 4}, {0, -12}}},
      {"K_{n-4} v C4", g1(6), {{plus1, {1, -5}}, {plus2, {0, 2}}}, {{0, 1}, {-1, 1}, {0, 0}, {4, -12}}},
      {"K_{n-5} v C5", five(0), {{plus1, {1, -5}}, {golden, {0, 2}}}, {{0, 1}, {-1, 1}}},
      {"K_{n-5} v (K1 u P4)", five(1), {{plus1, {1, -5}}, {golden, {0, 1}}},
       {{0, 1}, {-1, 3}, {-2, -10}, {4, -36}}},
      {"K_{n-5} v H1", five(2), {{plus1, {1, -5}}, {golden, {0, 1}}}, {{0, 1}, {-1, 3}, {-2, -2}, {4, -20}}},
      {"K_{n-3} v (K2 u K1)", join3(SmallGraph::kK2UnionK1), {{plus1, {1, -4}}, {lam, {0, 1}}},
       {{0, 1}, {-1, 4}, {-3, 1}, {0, -8}}},
      {"K_{n-3} v 3K1", join3(SmallGraph::kThreeK1), {{plus1, {1, -4}}, {plus2, {0, 2}}}, {{0, 1}, {-1, 0}, {1, -7}}},
  };
}

std::string affine_text(const Affine& f) {
  std::ostringstream out;
  if (f.a == 0) {
    out << f.b;
  } else {
    out << f.a << "n";
    if (f.b > 0) out << "+" << f.b;
    if (f.b < 0) out << f.b;
  }
  return out.str();
}

std::string affine_list(const std::vector<Affine>& fs) {
  std::string out = "[";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += affine_text(fs[i]);
  }
  return out + "]";
}

IntPolynomial fixed_part(const std::vector<FixedFactor>& factors, int n) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (const auto& f : factors) {
    const long e = f.exponent.a * n + f.exponent.b;
    if (e < 0) throw std::invalid_argument("negative factor exponent at n = " + std::to_string(n));
    out = out * f.base.pow(static_cast<unsigned>(e));
  }
  return out;
}

struct Extraction {
  bool divisible = true;
  int failed_n = 0;
  std::vector<Affine> fitted;   // descending, empty when not affine
  bool affine = true;
  std::string detail;
};

// Divides the fixed factors out of P(A(G_n)) at every sample n and fits each
// remaining coefficient as a polynomial in n through the first two samples.
Extraction extract(const TableRow& row, const std::vector<int>& samples) {
  Extraction ex;
  std::vector<IntPolynomial> rests;
  for (int n : samples) {
    const IntPolynomial p = acharpoly(build_family(row.id(n)));
    auto q = divide_exact(p, fixed_part(row.factors, n));
    if (!q) {
      ex.divisible = false;
      ex.failed_n = n;
      ex.detail = "P = " + p.to_pretty('x') + " is not divisible by the fixed factors at n = " + std::to_string(n);
      return ex;
    }
    rests.push_back(std::move(*q));
  }
  const int degree = rests.front().degree();
  for (const auto& r : rests) {
    if (r.degree() != degree) {
      ex.affine = false;
      ex.detail = "remaining factor degree changes with n";
      return ex;
    }
  }
  for (int k = degree; k >= 0; --k) {
    const auto k_index = static_cast<std::size_t>(k);
    const RatPolynomial fit = lagrange_interpolate(
        {{Rational(samples[0]), Rational(rests[0].coefficient(k_index))},
         {Rational(samples[1]), Rational(rests[1].coefficient(k_index))}});
    for (std::size_t s = 2; s < samples.size(); ++s) {
      if (fit.evaluate(Rational(samples[s])) != Rational(rests[s].coefficient(k_index))) {
        ex.affine = false;
        ex.detail = "coefficient of x^" + std::to_string(k) + " is not affine in n";
        return ex;
      }
    }
    const Rational a = fit.coefficient(1);
    const Rational b = fit.coefficient(0);
    if (a.get_den() != 1 || b.get_den() != 1) {
      ex.affine = false;
      ex.detail = "coefficient of x^" + std::to_string(k) + " has non-integral fit " + fit.to_pretty('n');
      return ex;
    }
    ex.fitted.push_back({a.get_num().get_si(), b.get_num().get_si()});
  }
  return ex;
}

// ---- census helpers -------------------------------------------------------

std::mutex& census_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::vector<CensusRecord>>& census_cache() {
  static std::map<int, std::vector<CensusRecord>> cache;
  return cache;
}

std::string canon_of(const FamilyId& id) { return canonical_form(build_family(id)).graph6; }

// Universal-vertex count t0 when g is S(t0, -p, t1..tq) and not complete.
std::optional<int> mixed_star_centre(const Graph& g) {
  const int n = g.order();
  VertexSet centre = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) centre |= Graph::bit(v);
  }
  if (!centre || centre == g.all_vertices()) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (centre & Graph::bit(v)) continue;
    const VertexSet leaf_nbrs = g.neighbors(v) & ~centre;
    for (VertexSet rest = leaf_nbrs; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if ((g.closed_neighbors(u) & ~centre) != (g.closed_neighbors(v) & ~centre)) return std::nullopt;
    }
  }
  return std::popcount(centre);
}

void check_orders(const std::vector<int>& ns, int lo, int hi, const std::string& what) {
  if (ns.empty()) throw std::invalid_argument(what + ": no orders selected");
  for (int n : ns) {
    if (n < lo || n > hi) {
      throw std::invalid_argument(what + ": order " + std::to_string(n) + " outside " + std::to_string(lo) + ".." +
                                  std::to_string(hi));
    }
  }
}

}  // namespace

const std::vector<CensusRecord>& census_records(int n, const SuiteOptions& options) {
  std::lock_guard<std::mutex> lock(census_mutex());
  auto& cache = census_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<CensusRecord> records;
  std::optional<std::filesystem::path> path;
  if (options.store_dir) path = *options.store_dir / ("census_n" + std::to_string(n) + ".tsv");
  if (path && std::filesystem::exists(*path)) {
    records = read_store(*path);
  } else {
    records = classify(n, {}, options.jobs);
    if (path) write_store(*path, records);
  }
  return cache.emplace(n, std::move(records)).first->second;
}

VerificationReport suite_theorem1(TheoremPart part, const SuiteOptions& options) {
  VerificationReport report;
  report.suite = "thm1-" + part_name(part);
  report.seed = options.seed;
  const std::vector<int> ns = options.n_values.empty() ? part_default_orders(part) : options.n_values;
  report.n_values = ns;
  const int deficit = part_deficit(part);
  check_orders(ns, part_min_order(part), kIfMaxOrder, report.suite);
  if (options.direction == Direction::kOnlyIf) {
    for (int n : ns) {
      if (n > kOnlyIfMaxOrder) {
        throw std::invalid_argument(report.suite + ": the only-if direction needs the census, available up to n = " +
                                    std::to_string(kOnlyIfMaxOrder) + ", got " + std::to_string(n));
      }
    }
  }
  if (part == TheoremPart::kII) {
    if (options.direction == Direction::kIf) throw std::invalid_argument("thm1-ii has no if direction");
    for (int n : ns) {
      if (n > kOnlyIfMaxOrder) {
        throw std::invalid_argument("thm1-ii is a census scan, available up to n = " + std::to_string(kOnlyIfMaxOrder));
      }
    }
  }
  const std::string claim = claim_text(part);

  for (int n : ns) {
    std::vector<ClaimedFamily> members;
    for (const auto& f : characterization_families(n)) {
      if (f.deficit == deficit) members.push_back(f);
    }
    if (options.direction != Direction::kOnlyIf) {
      for (const auto& f : members) {
        const std::size_t m = multiplicity(build_family(f.id), Rational(-1));
        report.add(claim + " [if]", describe(f.id), "m(-1) = " + std::to_string(n - deficit),
                   "m(-1) = " + std::to_string(m), m == static_cast<std::size_t>(n - deficit));
      }
    }
    const bool census_scan = options.direction != Direction::kIf && n <= kOnlyIfMaxOrder;
    if (!census_scan) continue;

    const auto& records = census_records(n, options);
    const auto hits = query(records, [&](const CensusRecord& r) {
      return r.mult_minus1 == static_cast<std::size_t>(n - deficit);
    });
    std::vector<std::string> expected;
    for (const auto& f : members) expected.push_back(canon_of(f.id));
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    std::vector<std::string> found;
    for (const auto& r : hits) found.push_back(r.canon.graph6);
    std::sort(found.begin(), found.end());
    report.add(claim + " [only if]",
               "census n = " + std::to_string(n) + " (" + std::to_string(records.size()) + " graphs)",
               std::to_string(expected.size()) + " graphs " + join_strings(expected),
               std::to_string(found.size()) + " graphs " + join_strings(found), found == expected);
    for (const auto& f : members) {
      const std::string tag = describe(f.id);
      if (f.id.index() == 6 || f.id.index() == 7) continue;
      const bool tagged = std::any_of(hits.begin(), hits.end(), [&](const CensusRecord& r) { return r.has_tag(tag); });
      report.add(claim + " [only if]", "census n = " + std::to_string(n) + " hit tagged " + tag, "tagged",
                 tagged ? "tagged" : "missing", tagged);
    }
    if (part == TheoremPart::kI || part == TheoremPart::kIII || part == TheoremPart::kIV) {
      for (const auto& r : hits) {
        const auto mates = cospectral_mates(records, r);
        std::vector<std::string> names;
        for (const auto& m : mates) names.push_back(m.canon.graph6);
        report.add("determined by its spectrum", "census n = " + std::to_string(n) + ", " + r.canon.graph6,
                   "no cospectral mates", names.empty() ? "no cospectral mates" : "mates " + join_strings(names),
                   names.empty());
      }
    }
    if (part == TheoremPart::kIV && n == kOnlyIfMaxOrder) {
      const auto five = query(records, [&](const CensusRecord& r) { return r.mult_minus1 == static_cast<std::size_t>(n - 5); });
      std::size_t tagged = 0;
      for (const auto& r : five) tagged += r.family_tags.empty() ? 0 : 1;
      report.notes.push_back("census n = " + std::to_string(n) + ": " + std::to_string(five.size()) +
                             " graphs have m(-1) = n-5 (" + std::to_string(tagged) +
                             " carry a family tag); reported only, since the n-5 characterization is stated for n >= 16");
    }
  }
  if (part == TheoremPart::kV) {
    report.notes.push_back("only-if direction at n >= 16 is beyond census range; covered by the member checks and the tables suite");
  }
  return report;
}

VerificationReport suite_tables(const SuiteOptions& options) {
  VerificationReport report;
  report.suite = "tables";
  report.seed = options.seed;
  const std::vector<int> ns = options.n_values.empty() ? range_inclusive(16, 20) : options.n_values;
  report.n_values = ns;
  if (ns.size() < 3) throw std::invalid_argument("tables: needs at least 3 sample orders");
  check_orders(ns, 16, kIfMaxOrder, "tables");
  {
    std::set<int> distinct(ns.begin(), ns.end());
    if (distinct.size() != ns.size()) throw std::invalid_argument("tables: sample orders must be distinct");
  }

  for (const auto& row : table_rows()) {
    const std::string claim = "characteristic polynomial of " + row.label;
    const Extraction ex = extract(row, ns);
    report.add(claim + ": fixed factors divide", "n = " + join_ints(ns), "divisible",
               ex.divisible ? "divisible" : ex.detail, ex.divisible);
    if (!ex.divisible) continue;
    report.add(claim + ": remaining coefficients affine in n", "n = " + join_ints(ns), "affine",
               ex.affine ? "affine" : ex.detail, ex.affine);
    if (!ex.affine) continue;
    report.expect_equal(claim + ": remaining factor", "n = " + join_ints(ns), affine_list(row.remainder),
                        affine_list(ex.fitted));
  }

  // Observed factorization for the 2K2 row.
  TableRow observed{"K_{n-4} v 2K2", [](int n) -> FamilyId { return family::G1Member{3, n}; },
                    {{lin(1), {1, -5}}, {IntPolynomial({0, 1}), {0, 2}}, {lin(4), {0, 1}}}, {}};
  const Extraction alt = extract(observed, ns);
  if (alt.divisible && alt.affine) {
    report.notes.push_back("K_{n-4} v 2K2 factors as (x+1)^(n-5) x^2 (x+4) [remaining coefficients " +
                           affine_list(alt.fitted) + "]");
  }
  report.notes.push_back(
      "the order-5 rows K1 u P4 and H1 are tested as joins with K_{n-5}; the polynomial degrees require this clique size");
  return report;
}

VerificationReport suite_median(const SuiteOptions& options) {
  VerificationReport report;
  report.suite = "median";
  report.seed = options.seed;
  const std::vector<int> ns = options.n_values.empty() ? std::vector<int>{20} : options.n_values;
  report.n_values = ns;
  check_orders(ns, 11, kIfMaxOrder, "median");
  for (int n : ns) {
    for (const auto& f : characterization_families(n)) {
      const Graph g = build_family(f.id);
      const MedianCheck mc = median_eigenvalue_is(g, Rational(-1));
      report.add("median eigenvalues equal -1", describe(f.id), "xi_H = xi_L = -1",
                 std::string("xi_H ") + (mc.at_h ? "= -1" : "!= -1") + ", xi_L " + (mc.at_l ? "= -1" : "!= -1"),
                 mc.at_h && mc.at_l);
      const Interval r = hl_index(g);
      report.add("HL-index equals 1", describe(f.id), "[1, 1]", r.to_string(), r.is_point() && r.lo == 1);
    }
  }
  return report;
}

VerificationReport suite_h1_oracle(const SuiteOptions& options) {
  VerificationReport report;
  report.suite = "h1-oracle";
  report.seed = options.seed;
  const std::vector<int> ns = options.n_values.empty() ? std::vector<int>{16} : options.n_values;
  report.n_values = ns;
  check_orders(ns, 6, kIfMaxOrder, "h1-oracle");
  std::map<std::string, Graph> tails;
  for (int mask = 0; mask < (1 << 10); ++mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int v = 1; v < 5; ++v) {
      for (int u = 0; u < v; ++u, ++bit) {
        if (mask & (1 << bit)) edges.emplace_back(u, v);
      }
    }
    Graph h(5, edges);
    if (h.max_degree() <= 3) tails.emplace(canonical_form(h).graph6, h);
  }
  std::vector<std::string> expected;
  for (SmallGraph h : kOrderFiveTails) expected.push_back(canonical_form(small_graph(h)).graph6);
  std::sort(expected.begin(), expected.end());
  for (int n : ns) {
    std::vector<std::string> hits;
    for (const auto& [canon, h] : tails) {
      if (multiplicity(join(complete_graph(n - 5), h), Rational(-1)) == static_cast<std::size_t>(n - 5)) {
        hits.push_back(canon);
      }
    }
    report.add("K_{n-5} v H has m(-1) = n-5 exactly for H in {C5, K1 u P4, bull}",
               "n = " + std::to_string(n) + ", " + std::to_string(tails.size()) + " graphs H of order 5 with max degree <= 3",
               join_strings(expected), join_strings(hits), hits == expected);
  }
  report.notes.push_back("H ranges over all 5-vertex graphs with max degree <= 3, connected or not");
  return report;
}

VerificationReport suite_conjecture1(const SuiteOptions& options) {
  VerificationReport report;
  report.suite = "conjecture1";
  report.seed = options.seed;
  const std::vector<int> ns = options.n_values.empty() ? range_inclusive(4, 8) : options.n_values;
  report.n_values = ns;
  check_orders(ns, 2, kOnlyIfMaxOrder, "conjecture1");
  for (int n : ns) {
    const auto& records = census_records(n, options);
    std::map<std::pair<long, int>, std::size_t> counts;
    for (const auto& r : records) {
      const long bound = static_cast<long>(n) * std::max(r.diam, 1);
      for (long xi = -bound; xi <= bound; ++xi) {
        if (xi >= -2 && xi <= 0) continue;
        if (r.charpoly.evaluate(Integer(xi)) != 0) continue;
        const int m = static_cast<int>(root_multiplicity(r.charpoly, Rational(xi)));
        const int i = n - m;
        if (i >= 1 && i <= 3) ++counts[{xi, i}];
      }
    }
    std::string summary;
    for (const auto& [key, count] : counts) {
      summary += (summary.empty() ? "" : "; ") + std::string("xi = ") + std::to_string(key.first) +
                 ", m = n-" + std::to_string(key.second) + ": " + std::to_string(count) + " graphs";
    }
    if (summary.empty()) summary = "none";
    report.add("exploratory: integer eigenvalues outside {-2,-1,0} with m = n-i, i <= 3",
               "census n = " + std::to_string(n), "exploratory", summary, true);
    report.notes.push_back("n = " + std::to_string(n) + ": " + summary);
  }
  return report;
}

VerificationReport suite_lemmas(const SuiteOptions& options) {
  VerificationReport report;
  report.suite = "lemmas";
  report.seed = options.seed;
  report.trials = options.trials;
  const std::vector<int> census_ns = options.n_values.empty() ? range_inclusive(1, 8) : options.n_values;
  report.n_values = census_ns;
  check_orders(census_ns, 1, kOnlyIfMaxOrder, "lemmas");
  Rng rng(options.seed);
  const int trials = options.trials;
  const std::string census_scope = "census n = " + join_ints(census_ns);

  // Random symmetric matrices: kernel properties.
  {
    Tally rank_vs_charpoly, leading, constant, inertia_monotone, inertia_rank;
    const int count = count_or(trials, 500);
    for (int t = 0; t < count; ++t) {
      const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 8));
      const IntMatrix m = random_symmetric(rng, n, -3, 3);
      const IntPolynomial p = berkowitz_charpoly(m);
      const std::size_t rank = bareiss_rank(m);
      rank_vs_charpoly.record(rank == n - root_multiplicity(p, Rational(0)), [&] { return matrix_text(m); });
      leading.record(p.coefficient(n - 1) == -m.trace() && p.is_monic() && p.degree() == static_cast<int>(n),
                     [&] { return matrix_text(m); });
      const Integer det = determinant(m);
      constant.record(p.coefficient(0) == (n % 2 ? -det : det), [&] { return matrix_text(m); });
      std::vector<Rational> cs;
      for (int k = 0; k < 4; ++k) cs.push_back(Rational(uniform(rng, -40, 40), uniform(rng, 1, 4)));
      std::sort(cs.begin(), cs.end());
      bool monotone = true;
      bool zero_ok = true;
      std::size_t last_plus = n + 1;
      for (const auto& c : cs) {
        const Inertia in = inertia_at(m, c);
        monotone = monotone && in.n_plus <= last_plus && in.size() == n;
        last_plus = in.n_plus;
        const std::size_t rank_shift = bareiss_rank(m.shifted(c.get_den(), c.get_num()));
        zero_ok = zero_ok && in.n_zero == n - rank_shift;
      }
      inertia_monotone.record(monotone, [&] { return matrix_text(m); });
      inertia_rank.record(zero_ok, [&] { return matrix_text(m); });
    }
    const std::string scope = std::to_string(count) + " random symmetric matrices, n <= 8";
    rank_vs_charpoly.report_to(report, "rank-charpoly: rank = n - multiplicity of root 0", scope);
    leading.report_to(report, "charpoly-trace: monic of degree n, next coefficient = -trace", scope);
    constant.report_to(report, "charpoly-det: constant term = (-1)^n det", scope);
    inertia_monotone.report_to(report, "inertia-monotone: n_plus never increases with the shift", scope);
    inertia_rank.report_to(report, "inertia-rank: n_zero = n - rank of the shifted matrix", scope);
  }

  {
    Tally divide;
    const int count = count_or(trials, 200);
    for (int t = 0; t < count; ++t) {
      auto random_monic = [&](int degree) {
        std::vector<Integer> c;
        for (int k = 0; k < degree; ++k) c.emplace_back(uniform(rng, -9, 9));
        c.emplace_back(1);
        return IntPolynomial(std::move(c));
      };
      const IntPolynomial a = random_monic(uniform(rng, 0, 6));
      const IntPolynomial b = random_monic(uniform(rng, 0, 6));
      const auto q = divide_exact(a * b, b);
      divide.record(q && *q == a, [&] { return a.to_pretty() + " / " + b.to_pretty(); });
    }
    divide.report_to(report, "exact-division: (a*b)/b = a", std::to_string(count) + " random monic pairs");
  }

  {
    Tally unit;
    const int count = count_or(trials, 500);
    const int as[] = {2, 3, 5};
    for (int t = 0; t < count; ++t) {
      const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 12));
      const int a = as[uniform(rng, 0, 2)];
      IntMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
          const int s = uniform(rng, 0, 1);
          m(i, j) = s * a;
          m(j, i) = s * a;
        }
      }
      unit.record(bareiss_rank(m) == n, [&] { return matrix_text(m); });
    }
    unit.report_to(report, "unit-diagonal-rank: symmetric {0,a} off-diagonal, unit diagonal, a >= 2 has full rank",
                   std::to_string(count) + " matrices, a in {2,3,5}, n <= 12");
  }

  {
    Tally interlace, bound;
    const int count = count_or(trials, 200);
    for (int t = 0; t < count; ++t) {
      const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 7));
      const IntMatrix m = random_symmetric(rng, n, -3, 3);
      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      idx.resize(static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(n))));
      std::sort(idx.begin(), idx.end());
      const IntMatrix sub = m.principal_submatrix(idx);
      const std::size_t k = idx.size();
      bool ok = true;
      for (std::size_t i = 1; i <= k && ok; ++i) {
        ok = compare_eigenvalues(m, i, sub, i) >= 0 && compare_eigenvalues(sub, i, m, n - k + i) >= 0;
      }
      interlace.record(ok, [&] { return matrix_text(m) + " rows " + std::to_string(k); });
      bool bounded = true;
      for (long xi : {-2L, -1L, 0L, 1L}) {
        bounded = bounded && eigenvalue_multiplicity(m, Rational(xi)) <=
                                 n - k + eigenvalue_multiplicity(sub, Rational(xi));
      }
      bound.record(bounded, [&] { return matrix_text(m) + " rows " + std::to_string(k); });
    }
    const std::string scope = std::to_string(count) + " random symmetric matrices with random principal submatrices";
    interlace.report_to(report, "interlacing: xi_i(M) >= xi_i(M*) >= xi_{n-k+i}(M)", scope);
    bound.report_to(report, "multiplicity-bound: m_M(xi) <= n - k + m_M*(xi), xi in {-2,-1,0,1}", scope);
  }

  {
    Tally identity, leftover;
    const int count = count_or(trials, 200);
    for (int t = 0; t < count; ++t) {
      BlockSpec spec;
      const int l = uniform(rng, 1, 4);
      spec.s.assign(static_cast<std::size_t>(l), std::vector<long>(static_cast<std::size_t>(l), 0));
      for (int i = 0; i < l; ++i) {
        spec.sizes.push_back(uniform(rng, 1, 5));
        spec.p.push_back(uniform(rng, -3, 3));
        for (int j = i; j < l; ++j) {
          const long v = uniform(rng, 0, 3);
          spec.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
          spec.s[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
      }
      identity.record(verify_spectrum_identity(spec), [&] { return spec.to_string(); });
      leftover.record(quotient(spec).leftover_size() == spec.order() - spec.blocks(), [&] { return spec.to_string(); });
    }
    const std::string scope = std::to_string(count) + " random block specs, l <= 4, n_i <= 5";
    identity.report_to(report, "quotient-identity: P(M) = P(Q) * prod (x - p_i)^(n_i - 1)", scope);
    leftover.report_to(report, "quotient-leftover: leftover size = n - l", scope);
  }

  {
    Tally triangle;
    const int count = count_or(trials, 1000);
    for (int t = 0; t < count; ++t) {
      const Graph g = random_connected_graph(rng, uniform(rng, 1, 10));
      const Metrics m = bfs_metrics(g);
      bool ok = true;
      for (int u = 0; u < g.order() && ok; ++u) {
        for (int v = 0; v < g.order() && ok; ++v) {
          for (int w = 0; w < g.order() && ok; ++w) ok = m.distance(u, w) <= m.distance(u, v) + m.distance(v, w);
        }
      }
      triangle.record(ok, [&] { return graph6_encode(g); });
    }
    triangle.report_to(report, "metric: triangle inequality", std::to_string(count) + " random connected graphs, n <= 10");
  }

  {
    Tally relabel;
    const int count = count_or(trials, 500);
    const int top = *std::max_element(census_ns.begin(), census_ns.end());
    const std::vector<CensusRecord>& pool = census_records(top, options);
    for (int t = 0; t < count; ++t) {
      const CensusRecord& r = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
      const Graph g = r.graph().relabeled(random_permutation(rng, r.n));
      relabel.record(canonical_form(g) == r.canon, [&] { return graph6_encode(g); });
    }
    relabel.report_to(report, "canonical-invariance: relabelled graphs keep their canonical form",
                      std::to_string(count) + " random relabellings at n = " + std::to_string(top));
  }

  {
    Tally families;
    const int count = 0;
    (void)count;
    for (int n = 2; n <= kIfMaxOrder; ++n) {
      for (const auto& f : characterization_families(n)) {
        const Graph g = build_family(f.id);
        families.record(is_connected(g) && g.order() == n && family_order(f.id) == n, [&] { return describe(f.id); });
      }
    }
    families.report_to(report, "families: every family graph is connected of the stated order", "n = 2..40");
  }

  // Census properties.
  Tally definition, rank_root, partition, prop_diam, complete_diam, twins_literal, roundtrip, twin_bound, smallest,
      v1_size, no_v1_bound, diam4, five_diam, lemma_v1_four, mixed_only_if, mixed_if, mixed_mult, blockspec, membership;
  for (int n : census_ns) {
    const auto& records = census_records(n, options);
    std::map<std::string, std::size_t> by_canon;
    for (std::size_t i = 0; i < records.size(); ++i) by_canon[records[i].canon.graph6] = i;
    for (const auto& f : characterization_families(n)) {
      const auto it = by_canon.find(canonical_form(build_family(f.id)).graph6);
      membership.record(it != by_canon.end() &&
                            records[it->second].mult_minus1 == multiplicity(build_family(f.id), Rational(-1)),
                        [&] { return describe(f.id); });
    }
    for (const auto& r : records) {
      const Graph g = r.graph();
      const Metrics metrics = bfs_metrics(g);
      const EccMatrix e = ecc_matrix(g, metrics);
      const auto g6 = [&] { return r.canon.graph6; };

      bool def_ok = true;
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u == v) continue;
          const int d = metrics.distance(u, v);
          const bool keep = d == std::min(metrics.ecc[static_cast<std::size_t>(u)], metrics.ecc[static_cast<std::size_t>(v)]);
          const Integer& x = e.m(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
          def_ok = def_ok && (keep ? x == d : x == 0);
        }
      }
      definition.record(def_ok, g6);

      rank_root.record(root_multiplicity(r.charpoly, Rational(-1)) == r.mult_minus1 &&
                           root_multiplicity(r.charpoly, Rational(-2)) == r.mult_minus2 &&
                           root_multiplicity(r.charpoly, Rational(0)) == r.mult_zero,
                       g6);

      std::vector<int> seen(static_cast<std::size_t>(n), 0);
      for (const auto& level : metrics.levels) {
        for (int v : level) ++seen[static_cast<std::size_t>(v)];
      }
      int min_ecc = *std::min_element(metrics.ecc.begin(), metrics.ecc.end());
      partition.record(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }) || n == 1 ?
                           2 * min_ecc >= metrics.diam : false,
                       g6);
      if (metrics.level_size(1) > 0) prop_diam.record(metrics.diam <= 2, g6);
      complete_diam.record((metrics.diam == 1) == (g.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2) && n > 1),
                           g6);

      bool literal = true;
      VertexSet used = 0;
      for (const auto& cls : duplicate_classes(g)) {
        for (int v : cls.vertices) {
          literal = literal && !(used & Graph::bit(v));
          used |= Graph::bit(v);
          const int u = cls.vertices.front();
          literal = literal && (cls.kind == TwinKind::kDuplicate ? g.neighbors(u) == g.neighbors(v)
                                                                 : g.closed_neighbors(u) == g.closed_neighbors(v));
        }
      }
      twins_literal.record(literal, g6);
      roundtrip.record(graph6_decode(graph6_encode(g)) == g, g6);

      bool bound_ok = true;
      for (const auto& pred : lemma_gx_predictions(g)) bound_ok = bound_ok && multiplicity(e, pred.xi) >= pred.lower_bound;
      twin_bound.record(bound_ok, g6);

      if (n >= 2) {
        const bool complete = metrics.diam == 1;
        const Inertia at_minus1 = inertia_at(e.m, Rational(-1));
        smallest.record((at_minus1.n_minus == 0 && at_minus1.n_zero > 0) == complete, g6);
      }

      const std::size_t k = static_cast<std::size_t>(n) - r.mult_minus1;
      if (metrics.level_size(1) > 0 && metrics.diam >= 2) {
        const std::size_t v1 = metrics.level_size(1);
        v1_size.record(v1 == n - k || v1 == n - k + 1, g6);
      }
      if (metrics.level_size(1) == 0 && metrics.diam >= 2) {
        const std::size_t kmax = static_cast<std::size_t>((n - 1) / (metrics.diam - 1));
        no_v1_bound.record(r.mult_minus1 + kmax + 1 <= static_cast<std::size_t>(n), g6);
      }
      if (metrics.diam >= 4) diam4.record(r.mult_minus1 + 5 <= static_cast<std::size_t>(n), g6);
      if (n >= 6 && r.mult_minus1 + 5 == static_cast<std::size_t>(n)) {
        five_diam.record(metrics.diam >= 2 && metrics.diam <= 4, g6);
      }
      if (n >= 5 && metrics.level_size(1) == static_cast<std::size_t>(n - 4)) {
        bool tagged = false;
        for (SmallGraph h : kG1Tails) {
          tagged = tagged || r.has_tag(describe(family::JoinCliqueWith{n - 4, h}));
        }
        lemma_v1_four.record(tagged && r.mult_minus1 + 5 == static_cast<std::size_t>(n), g6);
      }

      const auto centre = mixed_star_centre(g);
      const bool one_positive = inertia_at(e.m, Rational(0)).n_plus == 1;
      const bool star_shape = centre.has_value() || metrics.diam == 1;
      if (one_positive) mixed_only_if.record(star_shape, g6);
      if (star_shape) mixed_if.record(one_positive, g6);
      if (centre) mixed_mult.record(r.mult_minus1 + 1 == static_cast<std::size_t>(*centre), g6);

      std::vector<std::vector<int>> cells;
      if (auto spec = detect_join_blockspec(g, &cells)) {
        std::vector<std::size_t> order;
        for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
        blockspec.record(realize(*spec) == e.m.principal_submatrix(order) &&
                             quotient(*spec).leftover_size() == order.size() - spec->blocks(),
                         g6);
      }
    }
  }
  definition.report_to(report, "definition: nonzero entries are exactly d(u,v) = min(ecc u, ecc v)", census_scope);
  rank_root.report_to(report, "rank-multiplicity: rank-based m(xi) equals the charpoly root multiplicity", census_scope);
  partition.report_to(report, "levels: eccentricity levels partition V and min ecc >= diam/2", census_scope);
  prop_diam.report_to(report, "levels: V1 nonempty implies diam <= 2", census_scope);
  complete_diam.report_to(report, "levels: diam = 1 iff complete", census_scope);
  twins_literal.report_to(report, "twin-classes: classes are disjoint and share (closed) neighbourhoods", census_scope);
  roundtrip.report_to(report, "graph6: decode(encode(G)) = G", census_scope);
  twin_bound.report_to(report, "twin-eigenvalues: a twin class of size k forces multiplicity >= k-1", census_scope);
  smallest.report_to(report, "smallest-eigenvalue: xi_n = -1 iff complete", census_scope);
  v1_size.report_to(report, "v1-size: V1 nonempty, G not complete, m(-1) = n-k gives |V1| in {n-k, n-k+1}",
                    census_scope);
  no_v1_bound.report_to(report, "no-v1-bound: V1 empty and n >= k(d-1)+1 gives m(-1) <= n-k-1", census_scope);
  lemma_v1_four.report_to(report, "v1-four: |V1| = n-4 gives a K_{n-4} v H member with m(-1) = n-5", census_scope);
  mixed_only_if.report_to(report, "mixed-star-shape: exactly one positive eigenvalue gives a mixed extension of a star",
                          census_scope);
  mixed_if.report_to(report, "mixed-star-positive: a mixed extension of a star has exactly one positive eigenvalue",
                     census_scope);
  mixed_mult.report_to(report, "mixed-star-multiplicity: m(-1) = t0 - 1 on census mixed extensions", census_scope);
  blockspec.report_to(report, "join-blockspec: detected block spec realizes the eccentricity matrix", census_scope);
  membership.report_to(report, "census-membership: every family graph is in the census with its multiplicity",
                       census_scope);

  {
    // Large-diameter graphs beyond the census.
    for (int n = 5; n <= 14; ++n) {
      const Graph g = path_graph(n);
      diam4.record(multiplicity(g, Rational(-1)) + 5 <= static_cast<std::size_t>(n), [&] { return "P" + std::to_string(n); });
    }
    const int count = count_or(trials, 100);
    for (int t = 0; t < count; ++t) {
      Graph g = random_tree(rng, uniform(rng, 5, 14));
      if (bfs_metrics(g).diam < 4) continue;
      diam4.record(multiplicity(g, Rational(-1)) + 5 <= static_cast<std::size_t>(g.order()),
                   [&] { return graph6_encode(g); });
    }
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 3}, {3, 4}}) {
      const Graph g = grid_graph(a, b);
      diam4.record(multiplicity(g, Rational(-1)) + 5 <= static_cast<std::size_t>(g.order()),
                   [&] { return "grid " + std::to_string(a) + "x" + std::to_string(b); });
    }
    diam4.report_to(report, "diameter-four: diam >= 4 gives m(-1) <= n-5",
                    census_scope + ", paths and random trees up to n = 14, grids");
    five_diam.report_to(report, "five-diameter: m(-1) = n-5 gives 2 <= diam <= 4", census_scope);
  }

  // Sampled structured families.
  {
    Tally star_mult, star_positive;
    const int count = count_or(trials, 100);
    int drawn = 0;
    while (drawn < count) {
      const int t0 = uniform(rng, 1, 4);
      const int p = uniform(rng, 0, 3);
      std::vector<int> ts(static_cast<std::size_t>(uniform(rng, 0, 3)));
      for (int& t : ts) t = uniform(rng, 2, 4);
      const int cells = (p > 0 ? 1 : 0) + static_cast<int>(ts.size());
      if (cells < 2 && p < 2) continue;
      ++drawn;
      const Graph g = mixed_extension_star(t0, p, ts);
      const EccMatrix e = ecc_matrix(g);
      const std::string id = describe(family::MixedStar{t0, p, ts});
      star_mult.record(multiplicity(e, Rational(-1)) == static_cast<std::size_t>(t0 - 1), [&] { return id; });
      star_positive.record(inertia_at(e.m, Rational(0)).n_plus == 1, [&] { return id; });
    }
    const std::string scope = std::to_string(count) + " sampled mixed extensions of stars";
    star_mult.report_to(report, "mixed-star-multiplicity: m(-1) = t0 - 1", scope);
    star_positive.report_to(report, "mixed-star-positive: exactly one positive eigenvalue", scope);
  }

  {
    Tally minus_one, minus_two, equal_parts, no_clique, clique_indep;
    const int count = count_or(trials, 100);
    for (int t = 0; t < count; ++t) {
      const int r = uniform(rng, 1, 4);
      const int k = uniform(rng, 1, 4);
      std::vector<int> sizes(static_cast<std::size_t>(k));
      for (int& s : sizes) s = uniform(rng, 2, 4);
      std::sort(sizes.rbegin(), sizes.rend());
      std::vector<int> parts(static_cast<std::size_t>(r), 1);
      parts.insert(parts.end(), sizes.begin(), sizes.end());
      const Graph g = complete_multipartite(parts);
      const int n = g.order();
      const EccMatrix e = ecc_matrix(g);
      const std::string id = describe(family::CompleteMultipartite{parts});
      if (k >= 2) minus_one.record(multiplicity(e, Rational(-1)) == static_cast<std::size_t>(r - 1), [&] { return id; });
      const bool exceptional = (r == 1 && k == 4) || (r == 2 && k == 3);
      minus_two.record((multiplicity(e, Rational(-2)) == static_cast<std::size_t>(n - r - k)) == !exceptional,
                       [&] { return id; });
      bool runs_ok = true;
      for (std::size_t s = 0; s < sizes.size();) {
        std::size_t end = s;
        while (end < sizes.size() && sizes[end] == sizes[s]) ++end;
        runs_ok = runs_ok && multiplicity(e, Rational(2 * sizes[s] - 2)) == end - s - 1;
        s = end;
      }
      equal_parts.record(runs_ok, [&] { return id; });

      if (k >= 2) {
        const Graph h = complete_multipartite(sizes);
        IntPolynomial expected = IntPolynomial::linear_factor(-2).pow(static_cast<unsigned>(h.order() - k));
        for (int s : sizes) expected = expected * IntPolynomial::linear_factor(2 * s - 2);
        no_clique.record(acharpoly(h) == expected, [&] { return describe(family::CompleteMultipartite{sizes}); });
      }
      const int m = uniform(rng, 2, 8);
      const int rr = uniform(rng, 1, m - 2 >= 1 ? m - 2 : 1);
      if (m - rr >= 2) {
        const Graph kr = join(complete_graph(rr), empty_graph(m - rr));
        clique_indep.record(multiplicity(kr, Rational(-1)) == static_cast<std::size_t>(rr - 1),
                            [&] { return "K" + std::to_string(rr) + " v " + std::to_string(m - rr) + "K1"; });
      }
    }
    const std::string scope = std::to_string(count) + " sampled K_r v K_{n1..nk}, n_i >= 2";
    minus_one.report_to(report, "multipartite-minus-one: K_r v K_{n1..nk} (k >= 2) has m(-1) = r-1", scope);
    minus_two.report_to(report, "multipartite-minus-two: m(-2) = n-r-k iff (r,k) not in {(1,4),(2,3)}", scope);
    equal_parts.report_to(report, "multipartite-equal-parts: t equal parts n_s give m(2n_s - 2) = t-1", scope);
    no_clique.report_to(report, "multipartite-spectrum: K_{n1..nk} has spectrum -2^(n-k), 2n_i - 2", scope);
    clique_indep.report_to(report, "clique-independent-join: K_r v (n-r)K1 has m(-1) = r-1", scope);
  }
  return report;
}

std::vector<std::string> suite_names() {
  return {"thm1-i", "thm1-ii", "thm1-iii", "thm1-iv", "thm1-v", "tables", "lemmas", "median", "h1-oracle", "conjecture1"};
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  if (name == "thm1-i") report = suite_theorem1(TheoremPart::kI, options);
  else if (name == "thm1-ii") report = suite_theorem1(TheoremPart::kII, options);
  else if (name == "thm1-iii") report = suite_theorem1(TheoremPart::kIII, options);
  else if (name == "thm1-iv") report = suite_theorem1(TheoremPart::kIV, options);
  else if (name == "thm1-v") report = suite_theorem1(TheoremPart::kV, options);
  else if (name == "tables") report = suite_tables(options);
  else if (name == "lemmas") report = suite_lemmas(options);
  else if (name == "median") report = suite_median(options);
  else if (name == "h1-oracle") report = suite_h1_oracle(options);
  else if (name == "conjecture1") report = suite_conjecture1(options);
  else throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace eccspec
