#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eccspec/census.hpp"
#include "eccspec/families.hpp"
#include "eccspec/graph_io.hpp"
#include "eccspec/integer.hpp"
#include "eccspec/report.hpp"
#include "eccspec/spectra.hpp"
#include "eccspec/suites.hpp"

namespace fs = std::filesystem;
using namespace eccspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "4,5,6", "4..9" or a mix; repeated flags accumulate.
std::vector<int> parse_orders(const std::vector<std::string>& items) {
  std::vector<int> out;
  for (const auto& item : items) {
    std::stringstream in(item);
    std::string part;
    while (std::getline(in, part, ',')) {
      if (part.empty()) continue;
      try {
        const auto dots = part.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
          out.push_back(std::stoi(part, &used));
          if (used != part.size()) throw std::invalid_argument(part);
        } else {
          const int lo = std::stoi(part.substr(0, dots));
          const int hi = std::stoi(part.substr(dots + 2), &used);
          if (used != part.size() - dots - 2 || hi < lo) throw std::invalid_argument(part);
          for (int n = lo; n <= hi; ++n) out.push_back(n);
        }
      } catch (const std::exception&) {
        throw UsageError("--n: bad order list '" + item + "'");
      }
    }
  }
  return out;
}

Graph graph_arg(const std::string& text) {
  try {
    return load_graph_argument(text);
  } catch (const std::exception& e) {
    throw UsageError("<graph>: " + std::string(e.what()));
  }
}

std::optional<fs::path> default_store() {
  if (const char* env = std::getenv("ECCSPEC_STORE"); env && *env) return fs::path(env);
  return std::nullopt;
}

fs::path store_file(const fs::path& store, int n) {
  if (fs::is_directory(store) || !store.has_extension()) return store / ("census_n" + std::to_string(n) + ".tsv");
  return store;
}

void print_record(const CensusRecord& r) {
  std::cout << r.canon.graph6 << "\tn=" << r.n << " diam=" << r.diam << " v1=" << r.v1_size
            << " m(-1)=" << r.mult_minus1 << " m(-2)=" << r.mult_minus2 << " m(0)=" << r.mult_zero;
  for (const auto& tag : r.family_tags) std::cout << " " << tag;
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact eccentricity-matrix spectra of graphs"};
  app.require_subcommand(1);

  std::string graph_text;
  std::string xi_text;
  std::string family_text;
  bool pretty = false;
  bool edge_list = false;
  int census_n = 0;
  std::string store_text;
  std::string csv_path;
  std::vector<std::string> extra_xis;
  int jobs = 1;
  std::string query_store;
  std::string predicate_text;
  bool mates = false;
  std::string suite;
  std::vector<std::string> order_items;
  std::uint64_t seed = SuiteOptions{}.seed;
  int trials = 0;
  std::string format = "text";
  std::string direction = "auto";
  std::string output_path;
  bool verbose = false;

  auto* ecc = app.add_subcommand("ecc", "Print the eccentricity matrix");
  ecc->add_option("graph", graph_text, "graph6, edge-list file or family id")->required();

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial, descending coefficients");
  charpoly->add_option("graph", graph_text, "graph6, edge-list file or family id")->required();
  charpoly->add_flag("--pretty", pretty, "Print as a polynomial in x");

  auto* mult = app.add_subcommand("mult", "Multiplicity of an eigenvalue");
  mult->add_option("graph", graph_text, "graph6, edge-list file or family id")->required();
  mult->add_option("xi", xi_text, "Rational point, e.g. -1 or 3/2")->required();

  auto* family = app.add_subcommand("family", "Emit a named family graph as graph6");
  family->add_option("id", family_text, "e.g. complete:5, join:3:2K2, g1:4:16, five:C5:20")->required();
  family->add_flag("--edges", edge_list, "Emit an edge list instead");

  auto* census = app.add_subcommand("census", "Enumerate and classify connected graphs of order n");
  census->add_option("n", census_n, "Order")->required()->check(CLI::Range(1, kOnlyIfMaxOrder));
  census->add_option("--store", store_text, "Store file, or directory for census_n<N>.tsv");
  census->add_option("--csv", csv_path, "Also export CSV");
  census->add_option("--xi", extra_xis, "Extra multiplicity points");
  census->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* query_cmd = app.add_subcommand("query", "Filter a census store");
  query_cmd->add_option("store", query_store, "Store file")->required();
  query_cmd->add_option("predicate", predicate_text, "e.g. \"m-1=5,diam<=2\"")->required();
  query_cmd->add_flag("--mates", mates, "List cospectral mates of each hit");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", order_items, "Orders, e.g. 4,5,6 or 4..9");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--trials", trials, "Trials per property")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--store", store_text, "Directory of census stores");
  verify->add_option("--direction", direction, "if, only-if or auto")
      ->check(CLI::IsMember({"auto", "if", "only-if"}));
  verify->add_option("--output", output_path, "Also write the JSON report here");
  verify->add_flag("--verbose", verbose, "List passing checks too");

  auto* hl = app.add_subcommand("hl", "HL-index enclosure");
  hl->add_option("graph", graph_text, "graph6, edge-list file or family id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*ecc) {
      std::cout << ecc_matrix(graph_arg(graph_text)).m.to_string();
    } else if (*charpoly) {
      const IntPolynomial p = acharpoly(graph_arg(graph_text));
      std::cout << (pretty ? p.to_pretty('x') : p.to_descending_csv()) << "\n";
    } else if (*mult) {
      const Graph g = graph_arg(graph_text);
      Rational xi;
      try {
        xi = parse_rational(xi_text);
      } catch (const std::exception&) {
        throw UsageError("<xi>: not a rational number: '" + xi_text + "'");
      }
      std::cout << multiplicity(g, xi) << "\n";
    } else if (*family) {
      const Graph g = [&] {
        try {
          return build_family(parse_family_id(family_text));
        } catch (const std::exception& e) {
          throw UsageError("<id>: " + std::string(e.what()));
        }
      }();
      std::cout << (edge_list ? format_edge_list(g) : graph6_encode(g) + "\n");
    } else if (*census) {
      std::vector<Rational> xis;
      for (const auto& x : extra_xis) {
        try {
          xis.push_back(parse_rational(x));
        } catch (const std::exception&) {
          throw UsageError("--xi: not a rational number: '" + x + "'");
        }
      }
      const auto records = classify(census_n, xis, jobs);
      std::optional<fs::path> store = store_text.empty() ? default_store() : std::optional<fs::path>(store_text);
      if (store) {
        const fs::path path = store_file(*store, census_n);
        write_store(path, records);
        std::cerr << "wrote " << path.string() << "\n";
      }
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write " + csv_path);
        out << export_csv(records);
      }
      std::cout << records.size() << " connected graphs of order " << census_n << "\n";
    } else if (*query_cmd) {
      RecordPredicate predicate;
      try {
        predicate = parse_predicate(predicate_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError("<predicate>: " + std::string(e.what()));
      }
      const auto records = read_store(query_store);
      const auto hits = query(records, predicate);
      for (const auto& r : hits) {
        print_record(r);
        if (mates) {
          for (const auto& m : cospectral_mates(records, r)) std::cout << "  mate " << m.canon.graph6 << "\n";
        }
      }
      std::cerr << hits.size() << " of " << records.size() << " records\n";
    } else if (*verify) {
      SuiteOptions options;
      options.n_values = parse_orders(order_items);
      if (!order_items.empty() && options.n_values.empty()) throw UsageError("--n: empty order list");
      options.seed = seed;
      options.trials = trials;
      options.jobs = jobs;
      options.direction = direction == "if" ? Direction::kIf
                          : direction == "only-if" ? Direction::kOnlyIf
                                                   : Direction::kAuto;
      options.store_dir = store_text.empty() ? default_store() : std::optional<fs::path>(store_text);
      if (options.store_dir) fs::create_directories(*options.store_dir);
      VerificationReport report;
      try {
        report = run_suite(suite, options);
      } catch (const std::invalid_argument& e) {
        throw UsageError("--n/--direction: " + std::string(e.what()));
      }
      if (!output_path.empty()) {
        std::ofstream out(output_path);
        if (!out) throw std::runtime_error("cannot write " + output_path);
        out << report_to_json(report) << "\n";
      }
      std::cout << (format == "json" ? report_to_json(report) + "\n" : report_to_text(report, verbose));
      return report.ok() ? kExitOk : kExitCheckFailed;
    } else if (*hl) {
      std::cout << hl_index(graph_arg(graph_text)).to_string() << "\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << "Run with --help for more information.\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
