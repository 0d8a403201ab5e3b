#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mopt {

enum class Suite { dp, ptas, gnc, hybrid };

Suite suite_from_name(const std::string& name);

struct BenchRecord {
  std::string instance;
  std::string algorithm;
  std::string params;
  std::int64_t value = 0;
  std::optional<std::int64_t> oracle_value;
  int width = -1;
  std::int64_t table_entries = 0;
  double wall_ms = 0;
  bool ok = false;
};

struct SuiteResult {
  std::vector<BenchRecord> records;
  bool pass = false;

  std::size_t failures() const;
};

/// Runs one acceptance suite over the deterministic corpus. Failures are
/// recorded per instance, never thrown.
SuiteResult bench_run(Suite suite, std::uint64_t seed);

/// CSV with a header row. Wall times are excluded so output is
/// byte-identical across runs of the same seed.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
nlohmann::json records_to_json(const std::vector<BenchRecord>& records);

}  // namespace mopt
