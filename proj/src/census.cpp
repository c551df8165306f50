#include "eccspec/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "eccspec/families.hpp"
#include "eccspec/graph_io.hpp"
#include "eccspec/spectra.hpp"

namespace eccspec {

namespace {

void check_census_order(int n) {
  if (n < 1 || n > kMaxCensusOrder) {
    throw std::invalid_argument("census order must be in 1.." + std::to_string(kMaxCensusOrder) + ", got " +
                                std::to_string(n));
  }
}

int worker_count(int jobs) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  return jobs;
}

// Runs body(i) for i in [0, count) over `jobs` threads.
template <typename Body>
void parallel_for(std::size_t count, int jobs, Body body) {
  jobs = std::min<int>(worker_count(jobs), static_cast<int>(std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = next++; i < count; i = next++) body(i, t);
    });
  }
  for (auto& th : pool) th.join();
}

void compact(std::vector<std::uint64_t>& keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
}

std::vector<std::uint64_t> augment(const std::vector<std::uint64_t>& parents, int n, int jobs) {
  const int workers = std::min<int>(worker_count(jobs), static_cast<int>(std::max<std::size_t>(parents.size(), 1)));
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(workers));
  const VertexSet subsets = Graph::bit(n - 1);
  parallel_for(parents.size(), workers, [&](std::size_t i, int t) {
    auto& out = found[static_cast<std::size_t>(t)];
    const Graph parent = graph_from_key(n - 1, parents[i]);
    std::vector<VertexSet> rows = parent.rows();
    rows.push_back(0);
    for (VertexSet s = 1; s < subsets; ++s) {
      std::vector<VertexSet> child = rows;
      child.back() = s;
      for (VertexSet rest = s; rest; rest &= rest - 1) child[static_cast<std::size_t>(std::countr_zero(rest))] |= Graph::bit(n - 1);
      out.push_back(canonical_key(Graph::from_rows(std::move(child))));
    }
    if (out.size() > (std::size_t{1} << 22)) compact(out);
  });
  std::vector<std::uint64_t> merged;
  for (auto& part : found) {
    compact(part);
    merged.insert(merged.end(), part.begin(), part.end());
    std::vector<std::uint64_t>().swap(part);
  }
  compact(merged);
  return merged;
}

std::vector<std::string> split(std::string_view text, char sep) {
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

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

long parse_long(const std::string& text, std::string_view what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + text + "'");
  }
  return value;
}

}  // namespace

const std::vector<std::uint64_t>& ConnectedCensus::level(int n, int jobs) {
  check_census_order(n);
  std::lock_guard<std::mutex> lock(mutex_);
  if (levels_.empty()) levels_.push_back({0});
  while (static_cast<int>(levels_.size()) < n) {
    const int next = static_cast<int>(levels_.size()) + 1;
    auto keys = augment(levels_.back(), next, jobs);
    levels_.push_back(std::move(keys));
  }
  return levels_[static_cast<std::size_t>(n - 1)];
}

ConnectedCensus& shared_census() {
  static ConnectedCensus census;
  return census;
}

std::vector<Graph> enumerate_connected(int n, int jobs) {
  std::vector<Graph> out;
  for (std::uint64_t key : shared_census().level(n, jobs)) out.push_back(graph_from_key(n, key));
  return out;
}

Graph CensusRecord::graph() const { return graph6_decode(canon.graph6); }

bool CensusRecord::has_tag(std::string_view tag) const {
  return std::find(family_tags.begin(), family_tags.end(), tag) != family_tags.end();
}

std::map<std::string, std::vector<std::string>> family_tags_by_canon(int n) {
  std::vector<FamilyId> ids;
  if (n >= 1) {
    ids.push_back(family::CompleteK{n});
    ids.push_back(family::Path{n});
  }
  if (n >= 3) ids.push_back(family::Cycle{n});
  for (SmallGraph h : kAllSmallGraphs) {
    const int r = n - small_graph(h).order();
    if (r >= 1) ids.push_back(family::JoinCliqueWith{r, h});
  }
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& id : ids) out[canonical_form(build_family(id)).graph6].push_back(describe(id));
  return out;
}

CensusRecord classify_graph(const Graph& g, const std::vector<Rational>& extra_xis,
                            const std::map<std::string, std::vector<std::string>>& tags) {
  const Metrics metrics = bfs_metrics(g);
  const EccMatrix e = ecc_matrix(g, metrics);
  CensusRecord r;
  r.canon = canonical_form(g);
  r.n = g.order();
  r.diam = metrics.diam;
  r.v1_size = static_cast<int>(metrics.level_size(1));
  r.mult_minus1 = multiplicity(e, Rational(-1));
  r.mult_minus2 = multiplicity(e, Rational(-2));
  r.mult_zero = multiplicity(e, Rational(0));
  r.charpoly = berkowitz_charpoly(e.m);
  r.charpoly_digest = r.charpoly.digest();
  if (auto it = tags.find(r.canon.graph6); it != tags.end()) r.family_tags = it->second;
  for (const auto& xi : extra_xis) r.extra[xi] = multiplicity(e, xi);
  return r;
}

std::vector<CensusRecord> classify(int n, const std::vector<Rational>& extra_xis, int jobs) {
  const auto& keys = shared_census().level(n, jobs);
  const auto tags = family_tags_by_canon(n);
  std::vector<CensusRecord> out(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t i, int) {
    out[i] = classify_graph(graph_from_key(n, keys[i]), extra_xis, tags);
  });
  std::sort(out.begin(), out.end(),
            [](const CensusRecord& a, const CensusRecord& b) { return a.canon.graph6 < b.canon.graph6; });
  return out;
}

std::string format_record(const CensusRecord& r) {
  std::vector<std::string> extra;
  for (const auto& [xi, m] : r.extra) extra.push_back(to_string(xi) + "=" + std::to_string(m));
  std::ostringstream out;
  out << r.canon.graph6 << '\t' << r.n << ',' << r.diam << ',' << r.v1_size << ',' << r.mult_minus1 << ','
      << r.mult_minus2 << ',' << r.mult_zero << ',' << r.charpoly_digest << ',' << join(r.family_tags, '|') << ','
      << join(extra, '|') << '\t' << r.charpoly.to_ascending_csv();
  return out.str();
}

CensusRecord parse_record(std::string_view line) {
  const auto columns = split(line, '\t');
  if (columns.size() != 3) throw std::invalid_argument("store record: expected 3 tab-separated columns");
  const auto fields = split(columns[1], ',');
  if (fields.size() != 9) throw std::invalid_argument("store record: expected 9 invariant fields");
  CensusRecord r;
  r.canon = form_of_canonical_graph(graph6_decode(columns[0]));
  if (r.canon.graph6 != columns[0]) throw std::invalid_argument("store record: bad graph6 '" + columns[0] + "'");
  r.n = static_cast<int>(parse_long(fields[0], "n"));
  r.diam = static_cast<int>(parse_long(fields[1], "diam"));
  r.v1_size = static_cast<int>(parse_long(fields[2], "v1"));
  r.mult_minus1 = static_cast<std::size_t>(parse_long(fields[3], "m(-1)"));
  r.mult_minus2 = static_cast<std::size_t>(parse_long(fields[4], "m(-2)"));
  r.mult_zero = static_cast<std::size_t>(parse_long(fields[5], "m(0)"));
  try {
    std::size_t used = 0;
    r.charpoly_digest = std::stoull(fields[6], &used);
    if (used != fields[6].size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("store record: bad digest '" + fields[6] + "'");
  }
  if (!fields[7].empty()) r.family_tags = split(fields[7], '|');
  if (!fields[8].empty()) {
    for (const auto& item : split(fields[8], '|')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("store record: bad extra entry '" + item + "'");
      r.extra[parse_rational(item.substr(0, eq))] = static_cast<std::size_t>(parse_long(item.substr(eq + 1), "multiplicity"));
    }
  }
  std::vector<Integer> coeffs;
  for (const auto& c : split(columns[2], ',')) {
    try {
      coeffs.emplace_back(c);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("store record: bad coefficient '" + c + "'");
    }
  }
  r.charpoly = IntPolynomial(std::move(coeffs));
  return r;
}

void write_store(const std::filesystem::path& path, const std::vector<CensusRecord>& records) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write store " + path.string());
    out << "#eccspec-store v1\n";
    for (const auto& r : records) out << format_record(r) << '\n';
    if (!out) throw std::runtime_error("write failed for store " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot replace store " + path.string() + ": " + ec.message());
}

std::vector<CensusRecord> read_store(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open store " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "#eccspec-store v1") {
    throw std::runtime_error(path.string() + ": not an eccspec store (missing header)");
  }
  std::vector<CensusRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string export_csv(const std::vector<CensusRecord>& records) {
  std::string out = "graph6,n,diam,v1,m_minus1,m_minus2,m_zero,charpoly_digest,family_tags,charpoly\n";
  for (const auto& r : records) {
    std::string coeffs = r.charpoly.to_ascending_csv();
    std::replace(coeffs.begin(), coeffs.end(), ',', ' ');
    out += r.canon.graph6 + "," + std::to_string(r.n) + "," + std::to_string(r.diam) + "," +
           std::to_string(r.v1_size) + "," + std::to_string(r.mult_minus1) + "," + std::to_string(r.mult_minus2) +
           "," + std::to_string(r.mult_zero) + "," + std::to_string(r.charpoly_digest) + "," +
           join(r.family_tags, '|') + "," + coeffs + "\n";
  }
  return out;
}

RecordPredicate parse_predicate(std::string_view text) {
  std::vector<RecordPredicate> clauses;
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), '&', ',');
  for (auto clause : split(normalized, ',')) {
    clause.erase(std::remove_if(clause.begin(), clause.end(), [](unsigned char c) { return std::isspace(c); }),
                 clause.end());
    if (clause.empty()) continue;
    if (clause.starts_with("tag=")) {
      const std::string tag = clause.substr(4);
      clauses.push_back([tag](const CensusRecord& r) { return r.has_tag(tag); });
      continue;
    }
    const auto at = clause.find_first_of("<>=!", clause.starts_with("m(") ? clause.find(')') : 0);
    if (at == std::string::npos || at == 0) throw std::invalid_argument("predicate clause '" + clause + "' has no operator");
    const std::string field = clause.substr(0, at);
    std::size_t width = 1;
    if (at + 1 < clause.size() && clause[at + 1] == '=') width = 2;
    const std::string op = clause.substr(at, width);
    const long value = parse_long(clause.substr(at + width), "predicate value");

    std::function<std::optional<long>(const CensusRecord&)> get;
    auto fixed = [&](auto member) {
      get = [member](const CensusRecord& r) -> std::optional<long> { return static_cast<long>(r.*member); };
    };
    if (field == "n") {
      fixed(&CensusRecord::n);
    } else if (field == "diam") {
      fixed(&CensusRecord::diam);
    } else if (field == "v1") {
      fixed(&CensusRecord::v1_size);
    } else if (field == "m-1" || field == "m(-1)") {
      fixed(&CensusRecord::mult_minus1);
    } else if (field == "m-2" || field == "m(-2)") {
      fixed(&CensusRecord::mult_minus2);
    } else if (field == "m0" || field == "m(0)") {
      fixed(&CensusRecord::mult_zero);
    } else if (field.starts_with("m(") && field.ends_with(")")) {
      const Rational xi = parse_rational(field.substr(2, field.size() - 3));
      get = [xi](const CensusRecord& r) -> std::optional<long> {
        const auto it = r.extra.find(xi);
        if (it == r.extra.end()) return std::nullopt;
        return static_cast<long>(it->second);
      };
    } else {
      throw std::invalid_argument("unknown predicate field '" + field + "'");
    }

    std::function<bool(long, long)> cmp;
    if (op == "=" || op == "==") cmp = std::equal_to<long>();
    else if (op == "!=") cmp = std::not_equal_to<long>();
    else if (op == "<") cmp = std::less<long>();
    else if (op == "<=") cmp = std::less_equal<long>();
    else if (op == ">") cmp = std::greater<long>();
    else if (op == ">=") cmp = std::greater_equal<long>();
    else throw std::invalid_argument("unknown predicate operator '" + op + "'");

    clauses.push_back([get, cmp, value](const CensusRecord& r) {
      const auto x = get(r);
      return x && cmp(*x, value);
    });
  }
  if (clauses.empty()) throw std::invalid_argument("empty predicate");
  return [clauses](const CensusRecord& r) {
    return std::all_of(clauses.begin(), clauses.end(), [&](const RecordPredicate& c) { return c(r); });
  };
}

std::vector<CensusRecord> query(const std::vector<CensusRecord>& records, const RecordPredicate& predicate) {
  std::vector<CensusRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out), predicate);
  return out;
}

std::vector<CensusRecord> cospectral_mates(const std::vector<CensusRecord>& records, const CensusRecord& record) {
  std::vector<CensusRecord> out;
  for (const auto& r : records) {
    if (r.charpoly_digest == record.charpoly_digest && r.charpoly == record.charpoly && r.canon != record.canon) {
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace eccspec
