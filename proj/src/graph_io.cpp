#include "eccspec/graph_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccspec/families.hpp"

namespace eccspec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view what) {
  token = trim(token);
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(std::string(token), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (token.empty() || used != token.size()) {
    throw std::invalid_argument("edge list: bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6: order above 62 is not supported");
  std::string out(1, static_cast<char>(n + 63));
  int value = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw std::invalid_argument("graph6: byte " + std::to_string(b) + " outside 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > 62) throw std::invalid_argument("graph6: multi-byte size headers are not supported");
  if (n < 1) throw std::invalid_argument("graph6: order must be at least 1");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() != groups + 1) {
    throw std::invalid_argument("graph6: expected " + std::to_string(groups + 1) + " bytes for order " +
                                std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((group >> (5 - k % 6)) & 1) {
        rows[static_cast<std::size_t>(u)] |= Graph::bit(v);
        rows[static_cast<std::size_t>(v)] |= Graph::bit(u);
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> entries;
  std::string current;
  bool comment = false;
  for (char c : text) {
    if (c == '\n' || c == ';') {
      entries.push_back(current);
      current.clear();
      if (c == '\n') comment = false;
      continue;
    }
    if (c == '#') comment = true;
    if (!comment) current.push_back(c);
  }
  entries.push_back(current);

  int n = -1;
  std::vector<std::pair<int, int>> edges;
  for (const auto& raw : entries) {
    std::string_view entry = trim(raw);
    if (entry.empty()) continue;
    if (n < 0) {
      if (!entry.starts_with("n=")) throw std::invalid_argument("edge list: missing 'n=K' header");
      n = parse_int(entry.substr(2), "vertex count");
      continue;
    }
    std::istringstream in{std::string(entry)};
    std::string a, b, extra;
    if (!(in >> a >> b) || (in >> extra)) {
      throw std::invalid_argument("edge list: expected 'u v', got '" + std::string(entry) + "'");
    }
    edges.emplace_back(parse_int(a, "vertex"), parse_int(b, "vertex"));
  }
  if (n < 0) throw std::invalid_argument("edge list: missing 'n=K' header");
  return Graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph load_graph_argument(const std::string& arg) {
  if (arg.find(':') != std::string::npos) return build_family(parse_family_id(arg));
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot read graph file " + arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();
    try {
      if (trim(content).starts_with("n=")) return parse_edge_list(content);
      return graph6_decode(content);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(arg + ": " + e.what());
    }
  }
  return graph6_decode(arg);
}

}  // namespace eccspec
