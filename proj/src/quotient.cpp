#include "eccspec/quotient.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "eccspec/linalg.hpp"
#include "eccspec/spectra.hpp"

namespace eccspec {

namespace {

std::vector<std::string> split_fields(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

std::vector<long> parse_longs(const std::string& text) {
  std::istringstream in(text);
  std::vector<long> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("block spec: bad integer '" + token + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

std::size_t BlockSpec::order() const {
  std::size_t n = 0;
  for (int k : sizes) n += static_cast<std::size_t>(std::max(k, 0));
  return n;
}

void BlockSpec::validate() const {
  const std::size_t l = sizes.size();
  if (l == 0) throw std::invalid_argument("block spec: no blocks");
  for (std::size_t i = 0; i < l; ++i) {
    if (sizes[i] < 1) throw std::invalid_argument("block spec: block " + std::to_string(i + 1) + " has size < 1");
  }
  if (s.size() != l) throw std::invalid_argument("block spec: S must have " + std::to_string(l) + " rows");
  for (std::size_t i = 0; i < l; ++i) {
    if (s[i].size() != l) throw std::invalid_argument("block spec: S row " + std::to_string(i + 1) + " has wrong length");
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      if (s[i][j] != s[j][i]) {
        throw std::invalid_argument("block spec: S is not symmetric at (" + std::to_string(i + 1) + ", " +
                                    std::to_string(j + 1) + ")");
      }
    }
  }
  if (p.size() != l) throw std::invalid_argument("block spec: p must have " + std::to_string(l) + " entries");
}

std::string BlockSpec::to_string() const {
  std::ostringstream out;
  out << sizes.size() << ';';
  for (int k : sizes) out << ' ' << k;
  out << ';';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << " /";
    for (long v : s[i]) out << ' ' << v;
  }
  out << ';';
  for (long v : p) out << ' ' << v;
  return out.str();
}

BlockSpec BlockSpec::parse(std::string_view text) {
  const auto fields = split_fields(text, ';');
  if (fields.size() != 4) throw std::invalid_argument("block spec: expected 4 ';'-separated fields");
  const auto l = parse_longs(fields[0]);
  if (l.size() != 1 || l[0] < 1) throw std::invalid_argument("block spec: bad block count");
  BlockSpec spec;
  for (long k : parse_longs(fields[1])) spec.sizes.push_back(static_cast<int>(k));
  for (const auto& row : split_fields(fields[2], '/')) spec.s.push_back(parse_longs(row));
  spec.p = parse_longs(fields[3]);
  if (spec.sizes.size() != static_cast<std::size_t>(l[0])) {
    throw std::invalid_argument("block spec: block count does not match the size list");
  }
  spec.validate();
  return spec;
}

std::size_t QuotientResult::leftover_size() const {
  std::size_t total = 0;
  for (const auto& [value, count] : leftover) total += count;
  return total;
}

IntMatrix realize(const BlockSpec& spec) {
  spec.validate();
  const std::size_t l = spec.blocks();
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < l; ++i) owner.insert(owner.end(), static_cast<std::size_t>(spec.sizes[i]), i);
  const std::size_t n = owner.size();
  IntMatrix m(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      m(a, b) = spec.s[owner[a]][owner[b]];
      if (a == b) m(a, b) += spec.p[owner[a]];
    }
  }
  return m;
}

QuotientResult quotient(const BlockSpec& spec) {
  spec.validate();
  const std::size_t l = spec.blocks();
  QuotientResult out;
  out.q = IntMatrix(l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) out.q(i, j) = Integer(spec.s[i][j]) * spec.sizes[j];
    out.q(i, i) += spec.p[i];
    if (spec.sizes[i] >= 2) out.leftover.emplace_back(Integer(spec.p[i]), static_cast<std::size_t>(spec.sizes[i] - 1));
  }
  return out;
}

bool verify_spectrum_identity(const BlockSpec& spec) {
  const QuotientResult qr = quotient(spec);
  IntPolynomial rhs = berkowitz_charpoly(qr.q);
  for (const auto& [value, count] : qr.leftover) {
    rhs = rhs * IntPolynomial::linear_factor(value).pow(static_cast<unsigned>(count));
  }
  return berkowitz_charpoly(realize(spec)) == rhs;
}

std::optional<BlockSpec> detect_join_blockspec(const Graph& g, std::vector<std::vector<int>>* cells) {
  const Metrics metrics = bfs_metrics(g);
  if (!metrics.connected() || metrics.level_size(1) == 0) return std::nullopt;
  const int n = g.order();
  const IntMatrix a = ecc_matrix(g, metrics).m;

  std::vector<std::vector<int>> partition{metrics.levels[0]};
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int v : metrics.levels[0]) placed[static_cast<std::size_t>(v)] = true;
  for (const auto& cls : duplicate_classes(g)) {
    std::vector<int> rest;
    for (int v : cls.vertices) {
      if (!placed[static_cast<std::size_t>(v)]) rest.push_back(v);
    }
    if (rest.size() < 2) continue;
    for (int v : rest) placed[static_cast<std::size_t>(v)] = true;
    partition.push_back(std::move(rest));
  }
  for (int v = 0; v < n; ++v) {
    if (!placed[static_cast<std::size_t>(v)]) partition.push_back({v});
  }
  std::sort(partition.begin() + 1, partition.end());

  auto build = [&](const std::vector<std::vector<int>>& part) -> std::optional<BlockSpec> {
    const std::size_t l = part.size();
    BlockSpec spec;
    spec.s.assign(l, std::vector<long>(l, 0));
    spec.p.assign(l, 0);
    for (std::size_t i = 0; i < l; ++i) {
      spec.sizes.push_back(static_cast<int>(part[i].size()));
      for (std::size_t j = 0; j < l; ++j) {
        std::optional<long> value;
        for (int u : part[i]) {
          for (int v : part[j]) {
            if (u == v) continue;
            const long x = a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)).get_si();
            if (value && *value != x) return std::nullopt;
            value = x;
          }
        }
        if (value) spec.s[i][j] = *value;
      }
      spec.p[i] = -spec.s[i][i];
    }
    return spec;
  };

  auto spec = build(partition);
  if (!spec) {
    std::vector<std::vector<int>> fine{metrics.levels[0]};
    for (int v = 0; v < n; ++v) {
      if (metrics.ecc[static_cast<std::size_t>(v)] != 1) fine.push_back({v});
    }
    partition = std::move(fine);
    spec = build(partition);
  }
  if (spec && cells) *cells = partition;
  return spec;
}

}  // namespace eccspec
