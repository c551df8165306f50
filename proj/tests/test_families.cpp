#include <gtest/gtest.h>

#include "eccspec/canonical.hpp"
#include "eccspec/families.hpp"
#include "eccspec/graph_io.hpp"

using namespace eccspec;

namespace {

bool isomorphic(const Graph& a, const Graph& b) { return canonical_form(a) == canonical_form(b); }

}  // namespace

TEST(SmallGraphs, Shapes) {
  for (SmallGraph h : kAllSmallGraphs) {
    const auto token = small_graph_token(h);
    EXPECT_EQ(parse_small_graph_token(token), h) << token;
  }
  EXPECT_EQ(parse_small_graph_token("bull"), SmallGraph::kBull);
  EXPECT_FALSE(parse_small_graph_token("K9"));
  const Graph bull = small_graph(SmallGraph::kBull);
  EXPECT_EQ(bull.order(), 5);
  EXPECT_EQ(bull.edge_count(), 5u);
  std::vector<int> degrees;
  for (int v = 0; v < 5; ++v) degrees.push_back(bull.degree(v));
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<int>{1, 1, 2, 3, 3}));
  EXPECT_EQ(small_graph(SmallGraph::kK1UnionP4).edge_count(), 3u);
  EXPECT_EQ(small_graph(SmallGraph::kTwoK2).edge_count(), 2u);
  EXPECT_EQ(small_graph(SmallGraph::kTwoK2).max_degree(), 1);
}

TEST(Families, Examples) {
  EXPECT_TRUE(isomorphic(build_family(family::G1Member{0, 9}), join(complete_graph(5), empty_graph(4))));
  EXPECT_TRUE(isomorphic(build_family(family::OrderFiveMember{0, 16}), join(complete_graph(11), cycle_graph(5))));
  EXPECT_TRUE(isomorphic(build_family(family::OrderFiveMember{2, 16}),
                         join(complete_graph(11), small_graph(SmallGraph::kBull))));
  EXPECT_TRUE(isomorphic(build_family(family::JoinCliqueWith{4, SmallGraph::kTwoK1}),
                         join(complete_graph(4), empty_graph(2))));
  EXPECT_TRUE(isomorphic(build_family(family::CompleteMultipartite{{2, 2}}), cycle_graph(4)));
  EXPECT_TRUE(isomorphic(build_family(family::CompleteMultipartite{{1, 1, 1, 1, 2}}),
                         join(complete_graph(4), empty_graph(2))));
  EXPECT_EQ(build_family(family::JoinCliqueWith{0, SmallGraph::kC5}), cycle_graph(5));
  EXPECT_THROW(build_family(family::G1Member{7, 9}), std::invalid_argument);
  EXPECT_THROW(build_family(family::G1Member{0, 3}), std::invalid_argument);
}

TEST(Families, DescribeParseRoundTrip) {
  const std::vector<FamilyId> ids = {
      family::CompleteK{5},
      family::Path{4},
      family::Cycle{6},
      family::CompleteMultipartite{{1, 2, 3}},
      family::JoinCliqueWith{6, SmallGraph::kThreeK1},
      family::MixedStar{3, 2, {2, 3}},
      family::MixedStar{1, 3, {}},
      family::G1Member{4, 16},
      family::OrderFiveMember{1, 20},
  };
  for (const auto& id : ids) {
    const std::string text = describe(id);
    EXPECT_EQ(describe(parse_family_id(text)), text);
    EXPECT_EQ(family_order(id), build_family(id).order()) << text;
  }
  EXPECT_EQ(describe(parse_family_id("g1:P4:16")), "g1:4:16");
  EXPECT_EQ(describe(parse_family_id("five:bull:16")), "five:H1:16");
  EXPECT_EQ(describe(parse_family_id("five:2:16")), "five:H1:16");
  EXPECT_THROW(parse_family_id("star:5"), std::invalid_argument);
  EXPECT_THROW(parse_family_id("complete:x"), std::invalid_argument);
  EXPECT_THROW(parse_family_id("complete:5:1"), std::invalid_argument);
  EXPECT_THROW(parse_family_id("join:3:K9"), std::invalid_argument);
  EXPECT_THROW(parse_family_id("g1:C5:16"), std::invalid_argument);
}

TEST(Families, CharacterizationList) {
  const auto at16 = characterization_families(16);
  EXPECT_EQ(at16.size(), 1u + 1u + 2u + 7u + 3u);
  int deficit5 = 0;
  for (const auto& f : at16) {
    EXPECT_EQ(family_order(f.id), 16);
    deficit5 += f.deficit == 5;
  }
  EXPECT_EQ(deficit5, 10);
  const auto at4 = characterization_families(4);
  int deficit3 = 0;
  for (const auto& f : at4) deficit3 += f.deficit == 3;
  EXPECT_EQ(deficit3, 2);
  EXPECT_EQ(characterization_families(1).size(), 1u);
}
