// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fsx/lattice.hpp"
#include "fsx/norms.hpp"

namespace fsx {

inline constexpr int kReportSchemaVersion = 1;

struct HarnessConfig {
  int dim = 2;
  int bandlimit = 32;
  int oversample = 4;
  std::uint64_t seed = 42;
  std::vector<double> p{1.0, 4.0 / 3.0, 2.0, 4.0, std::numeric_limits<double>::infinity()};
  std::vector<double> s{-0.5, 0.0, 0.7, 1.2};
  /// Upper bound on fields per corpus; suites with costly cases use fewer.
  int corpus_size = 100;
  double decay = 2.0;
  /// Worker threads; 0 uses the hardware concurrency.
  int threads = 0;

  Lattice lattice() const;
  Lattice lattice(int K) const;
  /// next_pow2(max(oversample * 2K, 2K + 2)).
  int grid_size(int K) const;
  Quadrature quadrature(int K) const { return {grid_size(K)}; }
};

/// Overlays the keys present in `j` onto `base`. Unknown keys, wrong types,
/// corpus_size < 1 or other invalid values throw ConfigError.
HarnessConfig config_from_json(const nlohmann::json& j, HarnessConfig base = {});
nlohmann::json config_to_json(const HarnessConfig& c);
HarnessConfig read_config(const std::filesystem::path& path, HarnessConfig base = {});
/// Comma list of exponents ("1,4/3,2,inf") or reals; throws ConfigError.
std::vector<double> parse_number_list(std::string_view text, bool exponents);

struct CaseRecord {
  std::string id;
  std::string digest;
  double value = 0.0;
  std::string relation;  // "<=", ">=", "in", "=="
  double bound = 0.0;
  double lower = std::numeric_limits<double>::quiet_NaN();  // only for "in"
  bool pass = false;
  std::string note;
};

struct Report {
  std::string suite;
  std::string paper_ref;
  HarnessConfig config;
  std::vector<CaseRecord> cases;
  std::map<std::string, double> constants;
  std::vector<std::string> notes;
  double wall_time_s = 0.0;

  bool pass() const;
};

const std::vector<std::string>& suite_names();

/// Runs one registered suite. Mathematical failures are recorded as failing
/// cases; throws UnknownSuite for unregistered names and ConfigError for an
/// unusable configuration.
Report run_suite(std::string_view name, const HarnessConfig& cfg);
/// "all" expands to every registered suite, in registry order.
std::vector<Report> run_suites(const std::vector<std::string>& names, const HarnessConfig& cfg);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
/// {"schema_version", "pass", "reports": [...], "wall_time_s"}.
nlohmann::json reports_to_json(const std::vector<Report>& reports);
std::vector<Report> reports_from_json(const nlohmann::json& j);

/// Sorted keys, two-space indent, floating-point numbers as %.12e.
std::string canonical_dump(const nlohmann::json& j);
/// Drops every "wall_time_s" key, recursively.
nlohmann::json strip_timing(nlohmann::json j);

void write_report(const std::filesystem::path& path, const std::vector<Report>& reports);
std::vector<Report> read_report(const std::filesystem::path& path);

}  // namespace fsx
