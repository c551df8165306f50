#include "eccspec/families.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace eccspec {

namespace {

struct SmallGraphInfo {
  SmallGraph id;
  std::string_view token;
};

constexpr std::array<SmallGraphInfo, 13> kTokens = {{
    {SmallGraph::kFourK1, "4K1"},
    {SmallGraph::kTwoK1UnionK2, "2K1uK2"},
    {SmallGraph::kP3UnionK1, "P3uK1"},
    {SmallGraph::kTwoK2, "2K2"},
    {SmallGraph::kP4, "P4"},
    {SmallGraph::kK3UnionK1, "K3uK1"},
    {SmallGraph::kC4, "C4"},
    {SmallGraph::kC5, "C5"},
    {SmallGraph::kK1UnionP4, "K1uP4"},
    {SmallGraph::kBull, "H1"},
    {SmallGraph::kThreeK1, "3K1"},
    {SmallGraph::kK2UnionK1, "K2uK1"},
    {SmallGraph::kTwoK1, "2K1"},
}};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int to_int(std::string_view s, std::string_view context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("family id '" + std::string(context) + "': bad integer '" + std::string(s) + "'");
  }
  return value;
}

std::vector<int> to_int_list(std::string_view s, std::string_view context) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (auto item : split(s, ',')) out.push_back(to_int(item, context));
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

Graph clique_join(int r, const Graph& tail) {
  if (r < 0) throw std::invalid_argument("clique size must be non-negative, got " + std::to_string(r));
  if (r == 0) return tail;
  return join(complete_graph(r), tail);
}

SmallGraph tail_at(std::span<const SmallGraph> tails, int index, std::string_view what) {
  if (index < 0 || index >= static_cast<int>(tails.size())) {
    throw std::invalid_argument(std::string(what) + " index " + std::to_string(index) + " out of range");
  }
  return tails[static_cast<std::size_t>(index)];
}

int tail_index(std::span<const SmallGraph> tails, std::string_view field, std::string_view context) {
  if (auto h = parse_small_graph_token(field)) {
    for (std::size_t i = 0; i < tails.size(); ++i) {
      if (tails[i] == *h) return static_cast<int>(i);
    }
    throw std::invalid_argument("family id '" + std::string(context) + "': '" + std::string(field) +
                                "' is not a member tail");
  }
  return to_int(field, context);
}

}  // namespace

Graph small_graph(SmallGraph h) {
  switch (h) {
    case SmallGraph::kFourK1: return empty_graph(4);
    case SmallGraph::kTwoK1UnionK2: return Graph(4, {{2, 3}});
    case SmallGraph::kP3UnionK1: return Graph(4, {{0, 1}, {1, 2}});
    case SmallGraph::kTwoK2: return Graph(4, {{0, 1}, {2, 3}});
    case SmallGraph::kP4: return path_graph(4);
    case SmallGraph::kK3UnionK1: return Graph(4, {{0, 1}, {0, 2}, {1, 2}});
    case SmallGraph::kC4: return cycle_graph(4);
    case SmallGraph::kC5: return cycle_graph(5);
    case SmallGraph::kK1UnionP4: return Graph(5, {{1, 2}, {2, 3}, {3, 4}});
    case SmallGraph::kBull: return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    case SmallGraph::kThreeK1: return empty_graph(3);
    case SmallGraph::kK2UnionK1: return Graph(3, {{0, 1}});
    case SmallGraph::kTwoK1: return empty_graph(2);
  }
  throw std::invalid_argument("unknown small graph");
}

std::string_view small_graph_token(SmallGraph h) {
  for (const auto& info : kTokens) {
    if (info.id == h) return info.token;
  }
  throw std::invalid_argument("unknown small graph");
}

std::optional<SmallGraph> parse_small_graph_token(std::string_view token) {
  for (const auto& info : kTokens) {
    if (info.token == token) return info.id;
  }
  if (token == "bull") return SmallGraph::kBull;
  return std::nullopt;
}

Graph build_family(const FamilyId& id) {
  return std::visit(
      [](const auto& f) -> Graph {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::CompleteK>) {
          return complete_graph(f.n);
        } else if constexpr (std::is_same_v<T, family::Path>) {
          return path_graph(f.n);
        } else if constexpr (std::is_same_v<T, family::Cycle>) {
          return cycle_graph(f.n);
        } else if constexpr (std::is_same_v<T, family::CompleteMultipartite>) {
          return complete_multipartite(f.parts);
        } else if constexpr (std::is_same_v<T, family::JoinCliqueWith>) {
          return clique_join(f.r, small_graph(f.tail));
        } else if constexpr (std::is_same_v<T, family::MixedStar>) {
          return mixed_extension_star(f.t0, f.p, f.ts);
        } else if constexpr (std::is_same_v<T, family::G1Member>) {
          return clique_join(f.n - 4, small_graph(tail_at(kG1Tails, f.index, "g1")));
        } else {
          return clique_join(f.n - 5, small_graph(tail_at(kOrderFiveTails, f.index, "five")));
        }
      },
      id);
}

std::string describe(const FamilyId& id) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::CompleteK>) {
          return "complete:" + std::to_string(f.n);
        } else if constexpr (std::is_same_v<T, family::Path>) {
          return "path:" + std::to_string(f.n);
        } else if constexpr (std::is_same_v<T, family::Cycle>) {
          return "cycle:" + std::to_string(f.n);
        } else if constexpr (std::is_same_v<T, family::CompleteMultipartite>) {
          return "multipartite:" + join_ints(f.parts);
        } else if constexpr (std::is_same_v<T, family::JoinCliqueWith>) {
          return "join:" + std::to_string(f.r) + ":" + std::string(small_graph_token(f.tail));
        } else if constexpr (std::is_same_v<T, family::MixedStar>) {
          std::string out = "mixed:" + std::to_string(f.t0) + ":" + std::to_string(f.p);
          if (!f.ts.empty()) out += ":" + join_ints(f.ts);
          return out;
        } else if constexpr (std::is_same_v<T, family::G1Member>) {
          return "g1:" + std::to_string(f.index) + ":" + std::to_string(f.n);
        } else {
          return "five:" + std::string(small_graph_token(tail_at(kOrderFiveTails, f.index, "five"))) + ":" +
                 std::to_string(f.n);
        }
      },
      id);
}

FamilyId parse_family_id(std::string_view text) {
  const auto fields = split(text, ':');
  const std::string_view tag = fields[0];
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (fields.size() < lo || fields.size() > hi) {
      throw std::invalid_argument("family id '" + std::string(text) + "': wrong number of fields");
    }
  };
  if (tag == "complete" || tag == "path" || tag == "cycle") {
    need(2, 2);
    const int n = to_int(fields[1], text);
    if (tag == "complete") return family::CompleteK{n};
    if (tag == "path") return family::Path{n};
    return family::Cycle{n};
  }
  if (tag == "multipartite") {
    need(2, 2);
    return family::CompleteMultipartite{to_int_list(fields[1], text)};
  }
  if (tag == "join") {
    need(3, 3);
    const auto h = parse_small_graph_token(fields[2]);
    if (!h) throw std::invalid_argument("family id '" + std::string(text) + "': unknown graph '" + std::string(fields[2]) + "'");
    return family::JoinCliqueWith{to_int(fields[1], text), *h};
  }
  if (tag == "mixed") {
    need(3, 4);
    return family::MixedStar{to_int(fields[1], text), to_int(fields[2], text),
                             fields.size() == 4 ? to_int_list(fields[3], text) : std::vector<int>{}};
  }
  if (tag == "g1") {
    need(3, 3);
    return family::G1Member{tail_index(kG1Tails, fields[1], text), to_int(fields[2], text)};
  }
  if (tag == "five") {
    need(3, 3);
    return family::OrderFiveMember{tail_index(kOrderFiveTails, fields[1], text), to_int(fields[2], text)};
  }
  throw std::invalid_argument("unknown family tag '" + std::string(tag) + "'");
}

int family_order(const FamilyId& id) {
  return std::visit(
      [](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::CompleteK> || std::is_same_v<T, family::Path> ||
                      std::is_same_v<T, family::Cycle> || std::is_same_v<T, family::G1Member> ||
                      std::is_same_v<T, family::OrderFiveMember>) {
          return f.n;
        } else if constexpr (std::is_same_v<T, family::CompleteMultipartite>) {
          int n = 0;
          for (int p : f.parts) n += p;
          return n;
        } else if constexpr (std::is_same_v<T, family::JoinCliqueWith>) {
          return f.r + small_graph(f.tail).order();
        } else {
          int n = f.t0 + f.p;
          for (int t : f.ts) n += t;
          return n;
        }
      },
      id);
}

std::vector<ClaimedFamily> characterization_families(int n) {
  std::vector<ClaimedFamily> out;
  if (n >= 1) out.push_back({family::CompleteK{n}, 1});
  if (n - 2 >= 1) out.push_back({family::JoinCliqueWith{n - 2, SmallGraph::kTwoK1}, 3});
  if (n == 4) out.push_back({family::Path{4}, 3});
  if (n - 3 >= 1) {
    out.push_back({family::JoinCliqueWith{n - 3, SmallGraph::kK2UnionK1}, 4});
    out.push_back({family::JoinCliqueWith{n - 3, SmallGraph::kThreeK1}, 4});
  }
  if (n - 4 >= 1) {
    for (int i = 0; i < static_cast<int>(kG1Tails.size()); ++i) out.push_back({family::G1Member{i, n}, 5});
  }
  if (n - 5 >= 1) {
    for (int i = 0; i < static_cast<int>(kOrderFiveTails.size()); ++i) {
      out.push_back({family::OrderFiveMember{i, n}, 5});
    }
  }
  return out;
}

}  // namespace eccspec
