#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "eccspec/canonical.hpp"
#include "eccspec/graph.hpp"
#include "eccspec/integer.hpp"
#include "eccspec/polynomial.hpp"

namespace eccspec {

inline constexpr int kMaxCensusOrder = 10;

// Canonical keys (see canonical_key) of all connected graphs of order n,
// one per isomorphism class, in increasing key order. Built level by level:
// every (n-1)-vertex representative gets a new vertex attached to each
// nonempty subset of its vertices, and candidates are deduplicated by
// canonical form. Parents are sharded over `jobs` workers.
// Throws std::invalid_argument unless 1 <= n <= kMaxCensusOrder.
class ConnectedCensus {
 public:
  const std::vector<std::uint64_t>& level(int n, int jobs = 1);

 private:
  std::mutex mutex_;
  std::vector<std::vector<std::uint64_t>> levels_;
};

// Process-wide census shared by the verification suites.
ConnectedCensus& shared_census();

std::vector<Graph> enumerate_connected(int n, int jobs = 1);

struct CensusRecord {
  CanonicalForm canon;
  int n = 0;
  int diam = 0;
  int v1_size = 0;
  std::size_t mult_minus1 = 0;
  std::size_t mult_minus2 = 0;
  std::size_t mult_zero = 0;
  IntPolynomial charpoly;
  std::uint64_t charpoly_digest = 0;
  std::vector<std::string> family_tags;
  // Multiplicities at any additional queried points.
  std::map<Rational, std::size_t> extra;

  Graph graph() const;
  bool has_tag(std::string_view tag) const;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

// Family ids (describe() form) of the named families of order n, keyed by
// canonical form: complete, path, cycle and every clique-join K_r v H
// (r >= 1) over the small graphs.
std::map<std::string, std::vector<std::string>> family_tags_by_canon(int n);

CensusRecord classify_graph(const Graph& g, const std::vector<Rational>& extra_xis,
                            const std::map<std::string, std::vector<std::string>>& tags);

// One record per census graph of order n, sorted by canonical graph6.
std::vector<CensusRecord> classify(int n, const std::vector<Rational>& extra_xis = {},
                                   int jobs = 1);

// Store: a "#eccspec-store v1" header, then one line per record:
// canonical graph6 TAB n,diam,v1,m(-1),m(-2),m(0),digest,tags,extra TAB
// ascending charpoly coefficients. Tags are '|'-separated, extra entries
// "xi=mult" '|'-separated. Throws std::runtime_error naming the file.
void write_store(const std::filesystem::path& path, const std::vector<CensusRecord>& records);
std::vector<CensusRecord> read_store(const std::filesystem::path& path);
std::string format_record(const CensusRecord& record);
CensusRecord parse_record(std::string_view line);
// Fields in the order used by CSV export, with a header row.
std::string export_csv(const std::vector<CensusRecord>& records);

using RecordPredicate = std::function<bool(const CensusRecord&)>;

// Conjunction of clauses separated by ',' or '&':
//   field OP value   with field in n, diam, v1, m-1, m-2, m0 (or m(<xi>)
//                    for an extra point) and OP in = != < <= > >=
//   tag=<family id>  record carries the tag
// Throws std::invalid_argument on an unknown field or operator.
RecordPredicate parse_predicate(std::string_view text);

std::vector<CensusRecord> query(const std::vector<CensusRecord>& records,
                                const RecordPredicate& predicate);

// Records with the same characteristic polynomial but another canonical form.
std::vector<CensusRecord> cospectral_mates(const std::vector<CensusRecord>& records,
                                           const CensusRecord& record);

}  // namespace eccspec
