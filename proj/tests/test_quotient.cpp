#include <gtest/gtest.h>

#include <random>

#include "eccspec/families.hpp"
#include "eccspec/linalg.hpp"
#include "eccspec/quotient.hpp"
#include "eccspec/spectra.hpp"
#include "oracles.hpp"

using namespace eccspec;

TEST(BlockSpec, RealizeSmall) {
  const BlockSpec k4{{4}, {{1}}, {-1}};
  EXPECT_EQ(realize(k4), IntMatrix::all_ones(4) - IntMatrix::identity(4));
  const QuotientResult r = quotient(k4);
  EXPECT_EQ(r.q, (IntMatrix{{3}}));
  ASSERT_EQ(r.leftover.size(), 1u);
  EXPECT_EQ(r.leftover[0].first, -1);
  EXPECT_EQ(r.leftover[0].second, 3u);
  EXPECT_TRUE(verify_spectrum_identity(k4));
}

TEST(BlockSpec, CliqueJoinIndependentSet) {
  const BlockSpec spec{{4, 2}, {{1, 1}, {1, 2}}, {-1, -2}};
  EXPECT_EQ(realize(spec), ecc_matrix(join(complete_graph(4), empty_graph(2))).m);
  const QuotientResult r = quotient(spec);
  EXPECT_EQ(r.q, (IntMatrix{{3, 2}, {4, 2}}));
  EXPECT_EQ(r.leftover_size(), 4u);
  EXPECT_TRUE(verify_spectrum_identity(spec));
}

TEST(BlockSpec, OffDiagonalOnly) {
  const BlockSpec spec{{3, 3}, {{0, 1}, {1, 0}}, {0, 0}};
  EXPECT_EQ(quotient(spec).q, (IntMatrix{{0, 3}, {3, 0}}));
  EXPECT_TRUE(verify_spectrum_identity(spec));
}

TEST(BlockSpec, TextRoundTrip) {
  const BlockSpec spec{{4, 2, 1}, {{1, 1, 0}, {1, 2, 3}, {0, 3, 0}}, {-1, -2, 0}};
  EXPECT_EQ(BlockSpec::parse(spec.to_string()), spec);
  EXPECT_THROW(BlockSpec::parse("2; 1 1; 0 1 / 2 0; 0 0"), std::invalid_argument);
  EXPECT_THROW(BlockSpec::parse("2; 1; 0 1 / 1 0; 0 0"), std::invalid_argument);
  EXPECT_THROW(BlockSpec::parse("1; 1; 0"), std::invalid_argument);
}

TEST(BlockSpec, ValidateErrors) {
  EXPECT_THROW((BlockSpec{{0}, {{1}}, {0}}).validate(), std::invalid_argument);
  EXPECT_THROW((BlockSpec{{1, 1}, {{1}}, {0, 0}}).validate(), std::invalid_argument);
  EXPECT_THROW((BlockSpec{{1, 1}, {{0, 1}, {2, 0}}, {0, 0}}).validate(), std::invalid_argument);
  EXPECT_THROW((BlockSpec{{1}, {{0}}, {}}).validate(), std::invalid_argument);
}

TEST(BlockSpec, IdentityOnRandomSpecs) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t l = 1 + rng() % 4;
    BlockSpec spec;
    spec.s.assign(l, std::vector<long>(l));
    for (std::size_t i = 0; i < l; ++i) {
      spec.sizes.push_back(1 + static_cast<int>(rng() % 4));
      spec.p.push_back(entry(rng));
      for (std::size_t j = i; j < l; ++j) spec.s[i][j] = spec.s[j][i] = entry(rng);
    }
    const QuotientResult r = quotient(spec);
    IntPolynomial rhs = berkowitz_charpoly(r.q);
    for (const auto& [value, count] : r.leftover) {
      rhs = rhs * IntPolynomial(std::vector<Integer>{-value, Integer(1)}).pow(static_cast<unsigned>(count));
    }
    EXPECT_EQ(IntPolynomial(oracle::charpoly(realize(spec))), rhs) << spec.to_string();
    EXPECT_TRUE(verify_spectrum_identity(spec));
  }
}

TEST(DetectJoin, CliqueJoins) {
  std::vector<std::vector<int>> cells;
  const Graph g = join(complete_graph(4), empty_graph(2));
  const auto spec = detect_join_blockspec(g, &cells);
  ASSERT_TRUE(spec);
  EXPECT_EQ(realize(*spec).size(), 6u);
  IntPolynomial rhs = berkowitz_charpoly(quotient(*spec).q);
  for (const auto& [value, count] : quotient(*spec).leftover) {
    rhs = rhs * IntPolynomial(std::vector<Integer>{-value, Integer(1)}).pow(static_cast<unsigned>(count));
  }
  EXPECT_EQ(rhs, acharpoly(g));
  std::size_t covered = 0;
  for (const auto& c : cells) covered += c.size();
  EXPECT_EQ(covered, 6u);
  for (const auto& f : characterization_families(12)) {
    const Graph h = build_family(f.id);
    const auto s = detect_join_blockspec(h);
    ASSERT_TRUE(s) << describe(f.id);
    EXPECT_TRUE(verify_spectrum_identity(*s));
  }
}

TEST(DetectJoin, NoUniversalVertex) {
  EXPECT_FALSE(detect_join_blockspec(path_graph(5)));
  EXPECT_FALSE(detect_join_blockspec(cycle_graph(4)));
  EXPECT_FALSE(detect_join_blockspec(Graph(3)));
}
