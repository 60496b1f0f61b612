#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singlocus/lie_algebra.hpp"

namespace singlocus {

struct CheckInfo {
  std::string id;
  std::string summary;
  std::size_t default_samples = 0;  // 0: the check does not sample
  std::size_t max_positive_roots = 0;  // skipped above this r; 0: no limit
};

/// Registered checks in execution order.
const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(const std::string& id);

struct RunConfig {
  std::vector<AlgebraLabel> algebras;
  std::vector<std::string> checks;  // registry ids, in any order
  std::uint64_t seed = 42;
  std::map<std::string, std::size_t> sample_counts;
  int max_rank = 4;        // algebras of higher rank are skipped
  std::string cache_dir;   // empty: no cache
  bool timings = false;    // record wall-clock seconds (breaks byte-identical output)
};

enum class Status { pass, fail, skip };
std::string to_string(Status s);
Status parse_status(const std::string& s);

struct CheckRecord {
  std::string check;
  Status status = Status::skip;
  std::string detail;
  std::map<std::string, std::string> constants;       // exact fractions
  std::map<std::string, std::int64_t> dimensions;
  std::size_t samples = 0;
  std::string counterexample;  // offending element or subset when failing
  std::optional<double> seconds;
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct AlgebraRecord {
  std::string algebra;
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t positive_roots = 0;
  std::vector<CheckRecord> checks;
  friend bool operator==(const AlgebraRecord&, const AlgebraRecord&) = default;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<std::string> checks;
  std::vector<AlgebraRecord> algebras;
  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Runs the requested checks on every algebra. Algebras run concurrently;
/// the report lists them in config order and the checks in registry order.
VerificationReport run_suite(const RunConfig& config);

/// Runs one check on one algebra (used by run_suite and the acceptance tests).
CheckRecord run_check(const AlgebraLabel& label, const std::string& check, const RunConfig& config);

nlohmann::json to_json(const VerificationReport& rep);
VerificationReport report_from_json(const nlohmann::json& j);
std::string emit_json(const VerificationReport& rep);
std::string emit_markdown(const VerificationReport& rep);

}  // namespace singlocus
