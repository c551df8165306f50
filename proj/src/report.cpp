#include "eccspec/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace eccspec {

using nlohmann::json;

void VerificationReport::add(std::string claim, std::string instance, std::string expected, std::string actual,
                             bool pass) {
  entries.push_back({std::move(claim), std::move(instance), std::move(expected), std::move(actual), pass});
}

void VerificationReport::expect_equal(std::string claim, std::string instance, const std::string& expected,
                                      const std::string& actual) {
  add(std::move(claim), std::move(instance), expected, actual, expected == actual);
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; }));
}

std::size_t VerificationReport::failed() const { return entries.size() - passed(); }

std::string report_to_json(const VerificationReport& report, int indent) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"claim", e.claim},
                       {"instance", e.instance},
                       {"expected", e.expected},
                       {"actual", e.actual},
                       {"pass", e.pass}});
  }
  json doc = {
      {"schema_version", kReportSchemaVersion},
      {"suite", report.suite},
      {"parameters", {{"n_values", report.n_values}, {"seed", report.seed}, {"trials", report.trials}}},
      {"summary",
       {{"total", report.entries.size()}, {"passed", report.passed()}, {"failed", report.failed()}, {"ok", report.ok()}}},
      {"entries", entries},
      {"notes", report.notes},
      {"wall_seconds", report.wall_seconds},
  };
  return doc.dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
  VerificationReport r;
  try {
    const json doc = json::parse(text);
    const int version = doc.at("schema_version").get<int>();
    if (version != kReportSchemaVersion) {
      throw std::invalid_argument("unsupported report schema version " + std::to_string(version));
    }
    r.suite = doc.at("suite").get<std::string>();
    const auto& params = doc.at("parameters");
    r.n_values = params.at("n_values").get<std::vector<int>>();
    r.seed = params.at("seed").get<std::uint64_t>();
    r.trials = params.at("trials").get<int>();
    for (const auto& e : doc.at("entries")) {
      r.add(e.at("claim").get<std::string>(), e.at("instance").get<std::string>(),
            e.at("expected").get<std::string>(), e.at("actual").get<std::string>(), e.at("pass").get<bool>());
    }
    r.notes = doc.at("notes").get<std::vector<std::string>>();
    r.wall_seconds = doc.at("wall_seconds").get<double>();
    const auto& summary = doc.at("summary");
    if (summary.at("total").get<std::size_t>() != r.entries.size() ||
        summary.at("failed").get<std::size_t>() != r.failed()) {
      throw std::invalid_argument("report summary does not match its entries");
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string report_to_text(const VerificationReport& report, bool verbose) {
  std::ostringstream out;
  for (const auto& e : report.entries) {
    if (!verbose && e.pass) continue;
    out << (e.pass ? "ok   " : "FAIL ") << e.claim << " | " << e.instance << " | expected " << e.expected
        << ", got " << e.actual << '\n';
  }
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  out << report.suite << ": " << report.passed() << " passed, " << report.failed() << " failed ("
      << report.entries.size() << " checks, " << report.wall_seconds << " s)\n";
  return out.str();
}

}  // namespace eccspec
