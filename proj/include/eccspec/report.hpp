#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eccspec {

inline constexpr int kReportSchemaVersion = 1;

struct CheckEntry {
  std::string claim;     // citation of the claim being checked
  std::string instance;  // what it was checked on
  std::string expected;
  std::string actual;
  bool pass = false;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<int> n_values;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckEntry> entries;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;

  void add(std::string claim, std::string instance, std::string expected,
           std::string actual, bool pass);
  // Adds an entry that passes iff expected == actual.
  void expect_equal(std::string claim, std::string instance, const std::string& expected,
                    const std::string& actual);

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0 && !entries.empty(); }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// JSON with "schema_version", "suite", "parameters", "summary", "entries",
// "notes" and "wall_seconds". Throws std::invalid_argument on a document
// that does not match the schema.
std::string report_to_json(const VerificationReport& report, int indent = 2);
VerificationReport report_from_json(const std::string& text);

// One line per failing entry plus a summary line.
std::string report_to_text(const VerificationReport& report, bool verbose = false);

}  // namespace eccspec
