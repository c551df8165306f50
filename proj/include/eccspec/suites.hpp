#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eccspec/census.hpp"
#include "eccspec/report.hpp"

namespace eccspec {

// Highest order at which the "only if" directions are checked by census.
inline constexpr int kOnlyIfMaxOrder = 9;

enum class Direction { kAuto, kIf, kOnlyIf };

struct SuiteOptions {
  std::vector<int> n_values;  // empty: suite default
  std::uint64_t seed = 20240917;
  int trials = 0;             // 0: suite default
  int jobs = 1;
  Direction direction = Direction::kAuto;
  // Directory of census stores (census_n<N>.tsv); reused when present.
  std::optional<std::filesystem::path> store_dir;
};

// Parts i..v of the m(-1) = n - i characterization.
enum class TheoremPart { kI = 1, kII, kIII, kIV, kV };

// Throws std::invalid_argument for orders the part does not cover or an
// "only if" request beyond kOnlyIfMaxOrder.
VerificationReport suite_theorem1(TheoremPart part, const SuiteOptions& options);
// Table rows plus the two displayed order-(n-3) polynomials; needs >= 3 orders.
VerificationReport suite_tables(const SuiteOptions& options);
VerificationReport suite_lemmas(const SuiteOptions& options);
VerificationReport suite_median(const SuiteOptions& options);
// Brute-force identification of H1 among the 5-vertex graphs.
VerificationReport suite_h1_oracle(const SuiteOptions& options);
// Exploratory: census graphs with m(xi) = n - i (i <= 3) at an integer
// xi outside {-2, -1, 0}. Never fails; findings are reported as notes.
VerificationReport suite_conjecture1(const SuiteOptions& options);

std::vector<std::string> suite_names();
// Throws std::invalid_argument on an unknown suite.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options);

// Classified census of order n, cached per process; read from / written to
// options.store_dir when set.
const std::vector<CensusRecord>& census_records(int n, const SuiteOptions& options);

}  // namespace eccspec
