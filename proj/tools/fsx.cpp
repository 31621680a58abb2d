// SPDX-License-Identifier: Apache-2.0
// fsx: verification harness, norm evaluation and half-space solvers.
#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>

#include "fsx/error.hpp"
#include "fsx/field_io.hpp"
#include "fsx/halfspace.hpp"
#include "fsx/harness.hpp"
#include "fsx/norms.hpp"
#include "fsx/solvers.hpp"

namespace {

using namespace fsx;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

// "10", "10@0.33pi", "10@1.04" (modulus @ argument, radians unless suffixed pi).
Complex parse_lambda(const std::string& text) {
  try {
    const auto at = text.find('@');
    std::size_t used = 0;
    const double r = std::stod(text.substr(0, at), &used);
    if (used != (at == std::string::npos ? text.size() : at)) throw ConfigError("");
    if (at == std::string::npos) return r;
    std::string arg = text.substr(at + 1);
    double scale = 1.0;
    if (arg.size() > 2 && arg.ends_with("pi")) {
      arg.resize(arg.size() - 2);
      scale = std::numbers::pi;
    }
    const double theta = std::stod(arg, &used) * scale;
    if (used != arg.size()) throw ConfigError("");
    return std::polar(r, theta);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse lambda '" + text + "' (expected r or r@theta[pi])");
  }
}

struct VerifyArgs {
  std::vector<std::string> suites{"all"};
  std::string config, out, p, s;
  int dim = 0, bandlimit = 0, oversample = 0, threads = 0, corpus_size = 0;
  std::uint64_t seed = 0;
  double decay = 0.0;
};

int run_verify(const VerifyArgs& a, const CLI::App& cmd) {
  HarnessConfig cfg;
  if (!a.config.empty()) cfg = read_config(a.config, cfg);
  nlohmann::json flags = nlohmann::json::object();
  if (cmd.count("--dim")) flags["dim"] = a.dim;
  if (cmd.count("--bandlimit")) flags["bandlimit"] = a.bandlimit;
  if (cmd.count("--oversample")) flags["oversample"] = a.oversample;
  if (cmd.count("--seed")) flags["seed"] = a.seed;
  if (cmd.count("--threads")) flags["threads"] = a.threads;
  if (cmd.count("--corpus-size")) flags["corpus_size"] = a.corpus_size;
  if (cmd.count("--decay")) flags["decay"] = a.decay;
  cfg = config_from_json(flags, cfg);
  if (cmd.count("--p")) cfg.p = parse_number_list(a.p, true);
  if (cmd.count("--s")) cfg.s = parse_number_list(a.s, false);
  cfg = config_from_json(nlohmann::json::object(), cfg);

  const std::vector<Report> reports = run_suites(a.suites, cfg);
  bool pass = true;
  for (const Report& r : reports) {
    std::size_t failed = 0;
    for (const auto& c : r.cases) failed += c.pass ? 0 : 1;
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.suite << "  (" << r.cases.size() - failed << "/" << r.cases.size()
              << " cases, " << r.wall_time_s << " s)\n";
    for (const auto& c : r.cases)
      if (!c.pass) std::cout << "    failed: " << c.id << "  value " << c.value << " " << c.relation << " " << c.bound << "\n";
    pass = pass && r.pass();
  }
  if (!a.out.empty()) write_report(a.out, reports);
  return pass ? 0 : kExitFail;
}

int run_norm(const std::string& input, const std::string& space, const std::string& domain_text) {
  const Domain domain = parse_domain(domain_text);
  const Field u = read_field(input);
  const SpaceSpec spec = parse_space_spec(space, domain);
  nlohmann::json out{{"space", format_space_spec(spec)}, {"domain", std::string(to_string(domain))}};
  if (domain == Domain::whole) {
    out["value"] = space_norm(u, spec);
  } else {
    const RestrictionNorm r = restriction_norm(make_half_field(u), spec);
    out["value"] = r.value;
    out["witness"] = r.witness;
    if (r.lower_bound) out["lower_bound"] = *r.lower_bound;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct SolveArgs {
  std::string problem, lambda, f, g, out;
  double mu = 0.0;
};

int run_solve(const SolveArgs& a) {
  const bool resolvent = a.problem.ends_with("-resolvent");
  const BoundaryCondition bc = parse_boundary_condition(a.problem.substr(0, a.problem.find('-')));
  nlohmann::json out;
  if (resolvent) {
    if (a.lambda.empty()) throw ConfigError("--lambda is required for resolvent problems");
    if (a.f.empty()) throw ConfigError("--f is required for resolvent problems");
    const Complex lam = parse_lambda(a.lambda);
    const double mu = a.mu > 0.0 ? a.mu : 0.5 * (std::abs(std::arg(lam)) + std::numbers::pi);
    const HalfField f = make_half_field(read_field(a.f));
    const ResolventSolution sol = resolvent_halfspace(f, SectorPoint(lam, mu), bc);
    const ResolventResidual r = resolvent_residual(sol, f, lam, bc);
    out = half_field_to_json(sol.u);
    out["residual"] = {{"interior", r.interior}, {"boundary", r.boundary}, {"reflection", sol.reflection_residual}};
  } else {
    if (a.f.empty() && a.g.empty()) throw ConfigError("boundary-value problems need --f, --g or both");
    const Field fin = a.f.empty() ? Field() : read_field(a.f);
    const Field gin = a.g.empty() ? Field() : read_field(a.g);
    const Lattice lat = a.f.empty() ? make_lattice(gin.lattice().n + 1, gin.lattice().K, gin.lattice().L) : fin.lattice();
    const HalfField f = a.f.empty() ? HalfField{Field(lat), 0.0, 0.0} : make_half_field(fin);
    const Field g = a.g.empty() ? Field(make_lattice(lat.n - 1, lat.K, lat.L)) : gin;
    const BvpSolution sol = bc == BoundaryCondition::dirichlet ? bvp_dirichlet(f, g) : bvp_neumann(f, g);
    const BvpResidual r = bvp_residual(sol, f, g);
    out = half_field_to_json(sol.u);
    out["residual"] = {{"interior", r.interior},
                       {"boundary", r.boundary},
                       {"leakage", sol.leakage},
                       {"materialize", sol.materialize_residual}};
  }
  out["problem"] = a.problem;
  if (a.out.empty()) std::cout << out.dump(1) << "\n";
  else write_json_file(a.out, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fsx: spectral function-space toolkit"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run verification suites; exit 0 iff every suite passes");
  verify->add_option("--suite", va.suites, "suite name or 'all' (repeatable)")->delimiter(',');
  verify->add_option("--config", va.config, "JSON configuration file (flags override it)");
  verify->add_option("--dim", va.dim, "spatial dimension n");
  verify->add_option("--bandlimit", va.bandlimit, "bandlimit K");
  verify->add_option("--oversample", va.oversample, "quadrature oversampling factor");
  verify->add_option("--seed", va.seed, "corpus seed");
  verify->add_option("--p", va.p, "exponent list, e.g. 1,4/3,2,4,inf");
  verify->add_option("--s", va.s, "smoothness list, e.g. -0.5,0,0.7,1.2");
  verify->add_option("--corpus-size", va.corpus_size, "fields per corpus (upper bound)");
  verify->add_option("--decay", va.decay, "spectral decay of random fields");
  verify->add_option("--threads", va.threads, "worker threads (0 = hardware)");
  verify->add_option("--out", va.out, "write the canonical JSON report here");

  std::string input, space, domain = "whole";
  auto* norm = app.add_subcommand("norm", "evaluate a norm of a field");
  norm->add_option("--input", input, "field JSON")->required();
  norm->add_option("--space", space, "space, e.g. \"Hdot:s=0.5,p=2\"")->required();
  norm->add_option("--domain", domain, "whole | halfspace | halfspace_zero");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "half-space resolvent and boundary-value problems");
  solve->add_option("--problem", sa.problem, "problem kind")
      ->required()
      ->check(CLI::IsMember({"dirichlet-resolvent", "neumann-resolvent", "dirichlet-bvp", "neumann-bvp"}));
  solve->add_option("--lambda", sa.lambda, "spectral parameter: r or r@theta, theta in radians or with suffix pi");
  solve->add_option("--mu", sa.mu, "sector half-angle (default halfway between arg lambda and pi)");
  solve->add_option("--f", sa.f, "right-hand side field JSON");
  solve->add_option("--g", sa.g, "boundary data JSON (lattice of dimension n - 1)");
  solve->add_option("--out", sa.out, "output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (*verify) return run_verify(va, *verify);
    if (*norm) return run_norm(input, space, domain);
    return run_solve(sa);
  } catch (const fsx::Error& e) {
    std::cerr << "fsx: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "fsx: " << e.what() << "\n";
    return kExitError;
  }
}
