// SPDX-License-Identifier: Apache-2.0
// Acceptance run: every suite at the default desk-scale configuration, one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fsx/harness.hpp"

using namespace fsx;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  std::function<bool(const CaseRecord&)> select;  // empty: every case
};

bool contains(const std::string& s, const char* part) { return s.find(part) != std::string::npos; }

bool image_case(const CaseRecord& c) {
  return contains(c.id, "image_vs_eigenbasis") || contains(c.id, "_residual") || contains(c.id, "zero_data");
}

bool estimate_case(const CaseRecord& c) { return contains(c.id, "/c_mu") || contains(c.id, "/uniformity"); }

const Report* find(const std::vector<Report>& reports, const std::string& name) {
  for (const auto& r : reports)
    if (r.suite == name) return &r;
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "dyadic partition of unity and block support", {"lp_partition"}, {}},
      {2, "reconstruction from Littlewood-Paley blocks", {"reconstruction"}, {}},
      {3, "Plancherel gradient identity", {"plancherel"}, {}},
      {4, "Triebel-Lizorkin vs potential norms", {"norm_equiv"}, {}},
      {5, "Hoelder interpolation inequality", {"holder"}, {}},
      {6, "Sobolev embedding into L^4", {"embedding"}, {}},
      {7, "real interpolation and Hilbert sandwich", {"interp_real"}, {}},
      {8, "half-space indicator multiplier", {"strichartz_indicator"}, {}},
      {9, "reflection coefficients", {"reflection"}, {}},
      {10, "extension, restriction and zero-boundary projection", {"projection"}, {}},
      {11, "resolvent image identity", {"resolvent"}, image_case},
      {12, "sectorial resolvent estimate", {"resolvent"}, estimate_case},
      {13, "trace and Poisson semigroup", {"trace", "poisson"}, {}},
      {14, "Dirichlet and Neumann problems", {"bvp"}, {}},
      {15, "scaling homogeneity", {"scaling"}, {}},
  };

  const HarnessConfig cfg;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Report> first = run_suites({"all"}, cfg);
  const double t_first = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (argc > 1) write_report(argv[1], first);

  int failed = 0;
  for (const auto& cr : criteria) {
    std::size_t total = 0, bad = 0;
    std::vector<const CaseRecord*> misses;
    for (const auto& name : cr.suites) {
      const Report* r = find(first, name);
      if (!r) {
        ++total;
        ++bad;
        continue;
      }
      for (const auto& c : r->cases) {
        if (cr.select && !cr.select(c)) continue;
        ++total;
        if (!c.pass) {
          ++bad;
          misses.push_back(&c);
        }
      }
    }
    const bool pass = total > 0 && bad == 0;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << cr.number << ": " << cr.title << "  (" << total - bad
              << "/" << total << " cases)\n";
    for (std::size_t i = 0; i < misses.size() && i < 6; ++i) {
      const CaseRecord& c = *misses[i];
      std::cout << "        " << c.id << ": " << c.value << " " << c.relation << " " << c.bound;
      if (!c.note.empty()) std::cout << "  [" << c.note << "]";
      std::cout << "\n";
    }
    if (misses.size() > 6) std::cout << "        ... " << misses.size() - 6 << " more\n";
  }

  // Criterion 16: a second run on a different worker count must reproduce the
  // report byte for byte once timing fields are removed.
  HarnessConfig other = cfg;
  other.threads = 3;
  const std::vector<Report> second = run_suites({"all"}, other);
  auto body = [](const std::vector<Report>& rs) {
    return canonical_dump(strip_timing(reports_to_json(rs)));
  };
  const bool same = body(first) == body(second);
  failed += same ? 0 : 1;
  std::cout << (same ? "PASS" : "FAIL") << "  criterion 16: determinism across runs and worker counts\n";
  std::cout << "suite wall time (first run): " << t_first << " s\n";
  return failed == 0 ? 0 : 1;
}
