#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eccspec/graph.hpp"

namespace eccspec {

// The small graphs H that appear joined to a clique in the m(-1) = n-i
// characterization. kBull is H1: a triangle with pendant vertices at two
// distinct triangle vertices.
enum class SmallGraph {
  kFourK1,
  kTwoK1UnionK2,
  kP3UnionK1,
  kTwoK2,
  kP4,
  kK3UnionK1,
  kC4,
  kC5,
  kK1UnionP4,
  kBull,
  kThreeK1,
  kK2UnionK1,
  kTwoK1,
};

inline constexpr std::array<SmallGraph, 13> kAllSmallGraphs = {
    SmallGraph::kFourK1, SmallGraph::kTwoK1UnionK2, SmallGraph::kP3UnionK1,
    SmallGraph::kTwoK2,  SmallGraph::kP4,           SmallGraph::kK3UnionK1,
    SmallGraph::kC4,     SmallGraph::kC5,           SmallGraph::kK1UnionP4,
    SmallGraph::kBull,   SmallGraph::kThreeK1,      SmallGraph::kK2UnionK1,
    SmallGraph::kTwoK1};

// Vertex order within each small graph is fixed (see families.cpp).
Graph small_graph(SmallGraph h);
// Token used in family ids: "4K1", "2K1uK2", ..., "H1", "3K1", "K2uK1", "2K1".
std::string_view small_graph_token(SmallGraph h);
std::optional<SmallGraph> parse_small_graph_token(std::string_view token);

// The seven H (order 4) of the K_{n-4} v H family, in table order.
inline constexpr std::array<SmallGraph, 7> kG1Tails = {
    SmallGraph::kFourK1, SmallGraph::kTwoK1UnionK2, SmallGraph::kP3UnionK1,
    SmallGraph::kTwoK2,  SmallGraph::kP4,           SmallGraph::kK3UnionK1,
    SmallGraph::kC4};
// The three H (order 5) of the K_{n-5} v H family.
inline constexpr std::array<SmallGraph, 3> kOrderFiveTails = {
    SmallGraph::kC5, SmallGraph::kK1UnionP4, SmallGraph::kBull};

namespace family {
struct CompleteK { int n; };
struct Path { int n; };
struct Cycle { int n; };
struct CompleteMultipartite { std::vector<int> parts; };
struct JoinCliqueWith { int r; SmallGraph tail; };
struct MixedStar { int t0; int p; std::vector<int> ts; };
struct G1Member { int index; int n; };
struct OrderFiveMember { int index; int n; };
}  // namespace family

using FamilyId =
    std::variant<family::CompleteK, family::Path, family::Cycle,
                 family::CompleteMultipartite, family::JoinCliqueWith,
                 family::MixedStar, family::G1Member, family::OrderFiveMember>;

// Materializes the family graph. Joins place the clique block first, then
// the tail in its fixed order. Order ranges are not checked against any
// theorem's hypotheses. Throws std::invalid_argument on impossible
// parameters (e.g. a negative clique size, index out of range).
Graph build_family(const FamilyId& id);

// Canonical text form, e.g. "complete:5", "join:6:3K1", "g1:0:9",
// "five:C5:16", "multipartite:2,2", "mixed:3:2:2".
std::string describe(const FamilyId& id);
// Inverse of describe(). Throws std::invalid_argument on an unknown tag.
FamilyId parse_family_id(std::string_view text);

// Order of the materialized graph.
int family_order(const FamilyId& id);

// Every family graph named in the m(-1) = n-i (i <= 5) characterization at
// order n: K_n, P4 (n = 4), K_{n-2} v 2K1, K_{n-3} v (K2 u K1), K_{n-3} v 3K1,
// the seven K_{n-4} v H and the three K_{n-5} v H. Members with a
// non-positive clique size are skipped. Each entry carries the claimed
// multiplicity of -1 deficit i (m(-1) = n - i).
struct ClaimedFamily {
  FamilyId id;
  int deficit;
};
std::vector<ClaimedFamily> characterization_families(int n);

}  // namespace eccspec
