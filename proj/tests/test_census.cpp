#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "eccspec/census.hpp"
#include "eccspec/families.hpp"
#include "eccspec/graph_io.hpp"
#include "eccspec/spectra.hpp"
#include "oracles.hpp"

using namespace eccspec;

namespace {

std::filesystem::path temp_store(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("eccspec_test_" + name);
}

}  // namespace

TEST(Census, ConnectedCounts) {
  const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(shared_census().level(n).size(), expected[static_cast<std::size_t>(n - 1)]) << "n=" << n;
  }
  EXPECT_THROW(shared_census().level(0), std::invalid_argument);
  EXPECT_THROW(shared_census().level(kMaxCensusOrder + 1), std::invalid_argument);
}

TEST(Census, MatchesBruteForceClasses) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> brute;
    const unsigned long pairs = static_cast<unsigned long>(n * (n - 1) / 2);
    for (unsigned long mask = 0; mask < (1UL << pairs); ++mask) {
      const Graph g = oracle::graph_from_mask(n, mask);
      if (oracle::connected(g)) brute.insert(oracle::brute_canonical(g));
    }
    std::set<std::string> census;
    for (const Graph& g : enumerate_connected(n)) {
      EXPECT_TRUE(oracle::connected(g));
      census.insert(oracle::brute_canonical(g));
    }
    EXPECT_EQ(census, brute) << "n=" << n;
  }
}

TEST(Census, ParallelMatchesSerial) {
  ConnectedCensus serial;
  ConnectedCensus parallel;
  EXPECT_EQ(serial.level(7, 1), parallel.level(7, 3));
}

TEST(Census, RecordsAgreeWithDirectComputation) {
  for (const auto& r : classify(6)) {
    const Graph g = r.graph();
    EXPECT_EQ(r.n, 6);
    EXPECT_EQ(r.mult_minus1, multiplicity(g, Rational(-1)));
    EXPECT_EQ(r.mult_minus2, multiplicity(g, Rational(-2)));
    EXPECT_EQ(r.mult_zero, multiplicity(g, Rational(0)));
    EXPECT_EQ(r.charpoly, IntPolynomial(oracle::charpoly(oracle::ecc_matrix(g))));
    EXPECT_EQ(r.diam, bfs_metrics(g).diam);
  }
}

TEST(Census, Tags) {
  const auto records = classify(4);
  auto find = [&](const Graph& g) {
    const auto canon = canonical_form(g);
    for (const auto& r : records) {
      if (r.canon == canon) return r;
    }
    throw std::runtime_error("missing");
  };
  EXPECT_TRUE(find(complete_graph(4)).has_tag("complete:4"));
  EXPECT_TRUE(find(path_graph(4)).has_tag("path:4"));
  EXPECT_TRUE(find(path_graph(4)).has_tag("join:0:P4") == false);
  EXPECT_TRUE(find(cycle_graph(4)).has_tag("cycle:4"));
  EXPECT_TRUE(find(join(Graph(1), empty_graph(3))).has_tag("join:1:3K1"));
  EXPECT_TRUE(find(join(complete_graph(2), empty_graph(2))).has_tag("join:2:2K1"));
  EXPECT_TRUE(find(join(complete_graph(2), empty_graph(2))).family_tags.size() == 1u);
}

TEST(Census, QueryCompleteOnly) {
  const auto records = classify(7);
  const auto hits = query(records, parse_predicate("n=7,diam=1"));
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].canon, canonical_form(complete_graph(7)));
  const auto top = query(records, parse_predicate("m-1>=5"));
  for (const auto& r : top) EXPECT_GE(r.mult_minus1, 5u);
  EXPECT_EQ(query(records, parse_predicate("tag=complete:7")).size(), 1u);
  EXPECT_EQ(query(records, parse_predicate("diam<=2 & diam>=2")).size(),
            query(records, parse_predicate("diam=2")).size());
}

TEST(Census, PredicateErrors) {
  EXPECT_THROW(parse_predicate("foo=1"), std::invalid_argument);
  EXPECT_THROW(parse_predicate("n 3"), std::invalid_argument);
  EXPECT_THROW(parse_predicate("n=x"), std::invalid_argument);
}

TEST(Census, ExtraPoints) {
  const auto records = classify(5, {Rational(1, 2), Rational(-3)});
  for (const auto& r : records) {
    EXPECT_EQ(r.extra.at(Rational(-3)), multiplicity(r.graph(), Rational(-3)));
    EXPECT_EQ(r.extra.at(Rational(1, 2)), 0u);
  }
  EXPECT_EQ(query(records, parse_predicate("m(1/2)=0")).size(), records.size());
  EXPECT_TRUE(query(records, parse_predicate("m(5)=0")).empty());
}

TEST(Census, CospectralMates) {
  const auto records = classify(7);
  std::size_t with_mates = 0;
  for (const auto& r : records) {
    const auto mates = cospectral_mates(records, r);
    for (const auto& m : mates) {
      EXPECT_EQ(m.charpoly, r.charpoly);
      EXPECT_NE(m.canon, r.canon);
    }
    with_mates += !mates.empty();
  }
  EXPECT_GT(with_mates, 0u);
  const auto k7 = query(records, parse_predicate("diam=1"));
  EXPECT_TRUE(cospectral_mates(records, k7[0]).empty());
}

TEST(Store, RoundTrip) {
  const auto records = classify(5, {Rational(1, 2)});
  const auto path = temp_store("store.tsv");
  write_store(path, records);
  EXPECT_EQ(read_store(path), records);
  for (const auto& r : records) EXPECT_EQ(parse_record(format_record(r)), r);
  std::filesystem::remove(path);
}

TEST(Store, Errors) {
  EXPECT_THROW(read_store(temp_store("missing.tsv")), std::runtime_error);
  const auto path = temp_store("bad.tsv");
  {
    std::ofstream(path) << "not a store\n";
  }
  EXPECT_THROW(read_store(path), std::runtime_error);
  {
    std::ofstream(path) << "#eccspec-store v1\nD~{\t1,2\t0\n";
  }
  EXPECT_THROW(read_store(path), std::runtime_error);
  std::filesystem::remove(path);
}

TEST(Store, Csv) {
  const auto records = classify(3);
  const std::string csv = export_csv(records);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_TRUE(csv.starts_with("graph6,n,diam"));
}
