// SPDX-License-Identifier: Apache-2.0
// Internal plumbing shared by the harness and the suite implementations.
#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fsx/harness.hpp"

namespace fsx::detail {

/// Per-task output, merged in task order so reports do not depend on
/// scheduling.
struct Sink {
  std::vector<CaseRecord> cases;
  std::vector<std::pair<std::string, double>> maxima;
  std::vector<std::pair<std::string, double>> minima;
  std::vector<std::pair<std::string, double>> values;

  CaseRecord& le(std::string id, std::string digest, double value, double bound, std::string note = {});
  CaseRecord& ge(std::string id, std::string digest, double value, double bound, std::string note = {});
  CaseRecord& within(std::string id, std::string digest, double value, double lo, double hi, std::string note = {});

  void max(std::string name, double v) { maxima.emplace_back(std::move(name), v); }
  void min(std::string name, double v) { minima.emplace_back(std::move(name), v); }
  void set(std::string name, double v) { values.emplace_back(std::move(name), v); }
};

using Task = std::function<void(Sink&)>;

/// Runs the tasks on a worker pool and appends their cases and constants to
/// `out`. A task that throws is recorded as one failing case.
void run_tasks(const std::vector<Task>& tasks, int threads, Report& out);

struct SuiteDef {
  const char* name;
  const char* paper_ref;
  void (*run)(const HarnessConfig&, Report&);
};

const std::vector<SuiteDef>& suite_table();

/// Number formatting used in case ids.
std::string num(double v);

}  // namespace fsx::detail
