// SPDX-License-Identifier: Apache-2.0
// Verification suites. Each suite builds its corpora from the configured seed,
// runs its cases as tasks and turns measured quantities into case records.
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "fsx/corpus.hpp"
#include "fsx/halfspace.hpp"
#include "fsx/interpolation.hpp"
#include "fsx/littlewood_paley.hpp"
#include "fsx/multipliers.hpp"
#include "fsx/norms.hpp"
#include "fsx/solvers.hpp"
#include "fsx/trace_poisson.hpp"
#include "harness_detail.hpp"

namespace fsx::detail {

namespace {

constexpr double kPi = std::numbers::pi;

Corpus corpus(const HarnessConfig& cfg, CorpusKind kind, int cap, const Lattice& lat, double decay = 0.0) {
  const int size = std::max(1, std::min(cap, cfg.corpus_size));
  return generate_corpus(cfg.seed, kind, size, lat, CorpusOptions{decay > 0 ? decay : cfg.decay, true, 4});
}

Lattice boundary_lattice(const Lattice& lat) { return make_lattice(lat.n - 1, lat.K, lat.L); }

ExtendOptions grid_options(int M) {
  ExtendOptions o;
  o.M = M;
  return o;
}

SpaceSpec hdot(double s, double p = 2.0) { return SpaceSpec{Family::Hdot, s, p, 2.0, Domain::whole}; }

std::vector<int> unit(int n, int axis, int order = 1) {
  std::vector<int> a(n, 0);
  a[axis] = order;
  return a;
}

// Horizontal mode (1, 0, ..., 0).
std::vector<int> first_horizontal(const Lattice& lat) {
  std::vector<int> kh(lat.n - 1, 0);
  kh[0] = 1;
  return kh;
}

std::vector<double> random_point(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

double constant(const Report& r, const std::string& key) {
  const auto it = r.constants.find(key);
  return it == r.constants.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
}

// Cases produced from constants gathered by an earlier stage.
void finish(Report& rep, const std::function<void(Sink&)>& fn) {
  run_tasks({Task(fn)}, 1, rep);
}

// ---------------------------------------------------------------- lp_partition

void suite_lp_partition(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const DyadicFamily fam = build_dyadic_family(lat);
  const std::string dg = text_digest("lattice " + std::to_string(lat.n) + " " + std::to_string(lat.K) + " " + num(lat.L));
  std::vector<Task> tasks;
  tasks.push_back([&](Sink& s) {
    double dev = 0.0;
    for (std::size_t f = 0; f < lat.mode_count(); ++f) {
      const double r = std::sqrt(lat.freq_norm2(f));
      if (r == 0.0) continue;
      double sum = 0.0;
      for (int j = fam.j_min; j <= fam.j_max; ++j) sum += fam.psi(j, r);
      dev = std::max(dev, std::abs(sum - 1.0));
    }
    s.le("partition_of_unity", dg, dev, 1e-12);
  });
  tasks.push_back([&](Sink& s) {
    std::vector<double> radii;
    for (std::size_t f = 0; f < lat.mode_count(); ++f) radii.push_back(std::sqrt(lat.freq_norm2(f)));
    const double rmax = std::ldexp(1.0, fam.j_max + 3);
    constexpr int kSweep = 200000;
    for (int i = 0; i <= kSweep; ++i) radii.push_back(rmax * i / kSweep);
    double violations = 0.0;
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
      const double lo = 3.0 * std::ldexp(1.0, j - 2), hi = std::ldexp(1.0, j + 3) / 3.0;
      for (double r : radii)
        if ((r < lo || r > hi) && fam.psi(j, r) != 0.0) violations += 1.0;
    }
    s.le("psi_support_violations", dg, violations, 0.0);
  });
  tasks.push_back([&](Sink& s) {
    double prod = 0.0;
    for (std::size_t f = 0; f < lat.mode_count(); ++f) {
      const double r = std::sqrt(lat.freq_norm2(f));
      for (int j = fam.j_min; j <= fam.j_max; ++j)
        for (int k = j + 2; k <= fam.j_max; ++k) prod = std::max(prod, std::abs(fam.psi(j, r) * fam.psi(k, r)));
    }
    s.le("symbol_products_far_blocks", dg, prod, 0.0);
    const Corpus c = corpus(cfg, CorpusKind::random_bandlimited, 1, lat);
    double blocks = 0.0;
    for (int j = fam.j_min; j <= fam.j_max; ++j)
      for (int k = j + 2; k <= fam.j_max; ++k)
        blocks = std::max(blocks, delta_dot(delta_dot(c.fields[0], j, fam), k, fam).max_abs_coeff());
    s.le("block_products_far_blocks", c.digest(), blocks, 0.0);
  });
  run_tasks(tasks, cfg.threads, rep);
  rep.constants["j_min"] = fam.j_min;
  rep.constants["j_max"] = fam.j_max;
}

// -------------------------------------------------------------- reconstruction

void suite_reconstruction(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const DyadicFamily fam = build_dyadic_family(lat);
  const Quadrature quad = cfg.quadrature(lat.K);
  const Corpus c = corpus(cfg, CorpusKind::random_bandlimited, cfg.corpus_size, lat);
  std::vector<Task> tasks;
  for (std::size_t start = 0; start < c.size(); start += 10)
    tasks.push_back([&, start](Sink& s) {
      for (std::size_t i = start; i < std::min(start + 10, c.size()); ++i) {
        const Field& u = c.fields[i];
        const double err = lp_norm(reconstruct(decompose(u, fam)) - u, kInf, Domain::whole, quad) /
                           lp_norm(u, kInf, Domain::whole, quad);
        s.le("field_" + std::to_string(i), field_digest(u), err, 1e-10);
        s.max("max_relative_error", err);
      }
    });
  run_tasks(tasks, cfg.threads, rep);
}

// ------------------------------------------------------------------ plancherel

void suite_plancherel(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const Corpus c = corpus(cfg, CorpusKind::random_bandlimited, 20, lat);
  std::vector<Task> tasks;
  for (double sv : cfg.s)
    tasks.push_back([&, sv](Sink& s) {
      double worst = 0.0;
      for (const Field& u : c.fields) {
        double lhs = 0.0;
        for (int i = 0; i < lat.n; ++i) lhs += std::pow(sobolev_norm(derivative(u, unit(lat.n, i)), hdot(sv)), 2);
        const double rhs = std::pow(sobolev_norm(u, hdot(sv + 1.0)), 2);
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
      }
      s.le("s=" + num(sv), c.digest(), worst, 1e-10);
    });
  run_tasks(tasks, cfg.threads, rep);
}

// ----------------------------------------------------------------- norm_equiv

void suite_norm_equiv(const HarnessConfig& cfg, Report& rep) {
  const int K = cfg.bandlimit, Kh = cfg.bandlimit / 2;
  const Lattice lat = cfg.lattice();
  const Corpus c2 = corpus(cfg, CorpusKind::random_bandlimited, 8, lat);
  std::vector<double> ps;
  for (double p : cfg.p)
    if (p > 1.0 && p < kInf && p != 2.0) ps.push_back(p);
  std::vector<Task> tasks;
  for (double sv : cfg.s)
    tasks.push_back([&, sv](Sink& s) {
      double dev_h = 0.0, dev_b = 0.0;
      for (const Field& u : c2.fields) {
        const double f = triebel_norm(u, sv, 2.0, Domain::whole, cfg.quadrature(K));
        dev_h = std::max(dev_h, std::abs(f / sobolev_norm(u, hdot(sv)) - 1.0));
        dev_b = std::max(dev_b, std::abs(f / besov_norm(u, SpaceSpec{Family::Bdot, sv, 2.0, 2.0}) - 1.0));
      }
      s.le("p=2/s=" + num(sv) + "/F_vs_H", c2.digest(), dev_h, 1e-10,
           "a smooth dyadic partition gives sum_j 2^{2js} psi_j^2 comparable to |xi|^{2s}, not equal to it");
      s.le("p=2/s=" + num(sv) + "/F_vs_B", c2.digest(), dev_b, 1e-10);
    });
  std::vector<Corpus> corpora{corpus(cfg, CorpusKind::random_bandlimited, 6, cfg.lattice(Kh)),
                              corpus(cfg, CorpusKind::random_bandlimited, 6, lat)};
  for (std::size_t li = 0; li < corpora.size(); ++li)
    for (double p : ps)
      for (double sv : cfg.s)
        tasks.push_back([&, li, p, sv](Sink& s) {
          const Corpus& c = corpora[li];
          const Quadrature quad = cfg.quadrature(c.lattice.K);
          double lo = kInf, hi = 0.0;
          for (const Field& u : c.fields) {
            const double r = triebel_norm(u, sv, p, Domain::whole, quad) / sobolev_norm(u, hdot(sv, p), quad);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
          }
          const std::string id = "p=" + num(p) + "/s=" + num(sv) + "/K=" + std::to_string(c.lattice.K);
          s.within(id + "/ratio_min", c.digest(), lo, 0.1, 10.0);
          s.within(id + "/ratio_max", c.digest(), hi, 0.1, 10.0);
          s.set("C/" + id, std::max(hi, 1.0 / lo));
        });
  run_tasks(tasks, cfg.threads, rep);
  finish(rep, [&](Sink& s) {
    for (double p : ps)
      for (double sv : cfg.s) {
        const std::string base = "C/p=" + num(p) + "/s=" + num(sv) + "/K=";
        const double r = constant(rep, base + std::to_string(K)) / constant(rep, base + std::to_string(Kh));
        s.within("p=" + num(p) + "/s=" + num(sv) + "/stability", corpora[1].digest(), r, 0.5, 2.0);
      }
  });
}

// --------------------------------------------------------------------- holder

void suite_holder(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const Quadrature quad = cfg.quadrature(lat.K);
  const Corpus c = corpus(cfg, CorpusKind::random_bandlimited, cfg.corpus_size, lat);
  const Corpus cm = corpus(cfg, CorpusKind::random_bandlimited, 10, lat);
  const std::array<double, 3> thetas{0.25, 0.5, 0.75};
  std::vector<Task> tasks;
  for (std::size_t start = 0; start < c.size(); start += 20)
    tasks.push_back([&, start](Sink& s) {
      for (std::size_t i = start; i < std::min(start + 20, c.size()); ++i)
        for (double t : thetas) s.max("C/p=2/theta=" + num(t), holder_check(c.fields[i], -0.5, 1.2, 2.0, 2.0, t, quad));
    });
  for (std::size_t i = 0; i < cm.size(); ++i)
    tasks.push_back([&, i](Sink& s) {
      for (double t : thetas)
        s.max("C/mixed/theta=" + num(t), holder_check(cm.fields[i], 0.0, 1.0, 4.0 / 3.0, 4.0, t, quad));
    });
  run_tasks(tasks, cfg.threads, rep);
  finish(rep, [&](Sink& s) {
    for (double t : thetas) {
      s.le("p0=p1=2/theta=" + num(t), c.digest(), constant(rep, "C/p=2/theta=" + num(t)), 1.0 + 1e-10);
      s.le("p0=4/3,p1=4/theta=" + num(t), cm.digest(), constant(rep, "C/mixed/theta=" + num(t)), 10.0);
    }
  });
  rep.notes.push_back("p = 2 endpoints s0 = -0.5, s1 = 1.2; mixed endpoints (s, p) = (0, 4/3) and (1, 4)");
}

// ------------------------------------------------------------------ embedding

void suite_embedding(const HarnessConfig& cfg, Report& rep) {
  const int K = cfg.bandlimit, Kh = cfg.bandlimit / 2;
  const double sv = cfg.dim / 4.0;
  std::vector<Corpus> corpora{corpus(cfg, CorpusKind::random_bandlimited, 20, cfg.lattice(Kh)),
                              corpus(cfg, CorpusKind::random_bandlimited, 20, cfg.lattice(K))};
  std::vector<Task> tasks;
  for (std::size_t li = 0; li < corpora.size(); ++li)
    tasks.push_back([&, li](Sink& s) {
      const Corpus& c = corpora[li];
      const Quadrature quad = cfg.quadrature(c.lattice.K);
      double hi = 0.0;
      for (const Field& u : c.fields)
        hi = std::max(hi, lp_norm(u, 4.0, Domain::whole, quad) / sobolev_norm(u, hdot(sv)));
      s.le("K=" + std::to_string(c.lattice.K) + "/ratio_max", c.digest(), hi, 10.0);
      s.set("C/K=" + std::to_string(c.lattice.K), hi);
    });
  run_tasks(tasks, cfg.threads, rep);
  finish(rep, [&](Sink& s) {
    const double r = constant(rep, "C/K=" + std::to_string(K)) / constant(rep, "C/K=" + std::to_string(Kh));
    s.within("stability", corpora[1].digest(), r, 0.5, 2.0);
  });
  rep.notes.push_back("ratio ||u||_{L^4} / ||u||_{Hdot^{n/4,2}}");
}

// ---------------------------------------------------------------- interp_real

void suite_interp_real(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const Quadrature quad = cfg.quadrature(lat.K);
  const Corpus c = corpus(cfg, CorpusKind::random_bandlimited, 2, lat);
  const Corpus ch = corpus(cfg, CorpusKind::random_bandlimited, 5, lat);
  std::vector<Task> tasks;
  for (double p : {2.0, 4.0})
    for (auto [s0, s1] : {std::pair{0.0, 1.0}, std::pair{-0.5, 0.7}})
      for (double theta : {0.25, 0.5, 0.75})
        for (double q : {1.0, 2.0, kInf})
          tasks.push_back([&, p, s0, s1, theta, q](Sink& s) {
            const Couple cp{hdot(s0, p), hdot(s1, p)};
            const SpaceSpec target{Family::Bdot, (1 - theta) * s0 + theta * s1, p, q};
            for (std::size_t i = 0; i < c.size(); ++i) {
              const Field& u = c.fields[i];
              const double r = real_interp_norm(u, cp, theta, q, {}, quad) / besov_norm(u, target, quad);
              s.within("p=" + num(p) + "/s0=" + num(s0) + "/s1=" + num(s1) + "/theta=" + num(theta) + "/q=" + num(q) +
                           "/field_" + std::to_string(i),
                       field_digest(u), r, 0.1, 10.0);
              s.max("C/equivalence", std::max(r, 1.0 / r));
            }
          });
  const std::vector<std::pair<std::string, Couple>> couples{
      {"L2,Hdot1", Couple{SpaceSpec{Family::Lp, 0.0, 2.0}, hdot(1.0)}},
      {"Hdot-0.5,Hdot0.7", Couple{hdot(-0.5), hdot(0.7)}}};
  for (const auto& [name, cp] : couples)
    tasks.push_back([&, name, cp](Sink& s) {
      double lower = 0.0, slack = 0.0, best_lo = kInf, best_hi = 0.0;
      for (const Field& u : ch.fields) {
        const KCurve up = k_curve(u, cp, KKind::upper_dyadic, {}, quad);
        const KCurve ex = k_curve(u, cp, KKind::exact_hilbert, {}, quad);
        const KCurve best = k_curve(u, cp, KKind::best, {}, quad);
        for (std::size_t i = 0; i < up.t.size(); ++i) {
          lower = std::max(lower, ex.values[i] / up.values[i]);
          slack = std::max(slack, up.values[i] / (std::sqrt(2.0) * ex.values[i]));
          best_lo = std::min(best_lo, best.values[i] / ex.values[i]);
          best_hi = std::max(best_hi, best.values[i] / (std::sqrt(2.0) * ex.values[i]));
        }
      }
      s.le(name + "/K2_over_upper", ch.digest(), lower, 1.0 + 1e-12);
      s.le(name + "/dyadic_slack", ch.digest(), slack, 3.0);
      s.ge(name + "/best_over_K2", ch.digest(), best_lo, 1.0 - 1e-12);
      s.le(name + "/best_over_sqrt2_K2", ch.digest(), best_hi, 1.0 + 1e-12);
      s.max("slack/" + name, slack);
    });
  run_tasks(tasks, cfg.threads, rep);
}

// -------------------------------------------------------- strichartz_indicator

Field drop_vertical_column(Field u) {
  const Lattice& lat = u.lattice();
  std::vector<int> k(lat.n);
  auto c = u.coeffs();
  for (std::size_t f = 0; f < c.size(); ++f) {
    lat.decode(f, k);
    if (std::all_of(k.begin(), k.end() - 1, [](int v) { return v == 0; })) c[f] = 0.0;
  }
  return u;
}

void suite_strichartz_indicator(const HarnessConfig& cfg, Report& rep) {
  const int K = cfg.bandlimit, K2 = 2 * cfg.bandlimit;
  const std::array<double, 4> svals{-0.4, 0.0, 0.4, 0.9};
  std::vector<Corpus> corpora{corpus(cfg, CorpusKind::random_bandlimited, 6, cfg.lattice(K)),
                              corpus(cfg, CorpusKind::random_bandlimited, 6, cfg.lattice(K2))};
  for (auto& c : corpora)
    for (auto& f : c.fields) f = drop_vertical_column(std::move(f));
  std::vector<Task> tasks;
  for (std::size_t li = 0; li < corpora.size(); ++li)
    for (std::size_t i = 0; i < corpora[li].size(); ++i)
      tasks.push_back([&, li, i](Sink& s) {
        const Field& u = corpora[li].fields[i];
        const Projection one = indicator_multiply(u);
        for (double sv : svals) {
          const double r = sobolev_norm(one.field, hdot(sv)) / sobolev_norm(u, hdot(sv));
          s.max("C/s=" + num(sv) + "/K=" + std::to_string(u.lattice().K), r);
        }
        s.max("indicator_residual", one.residual);
      });
  run_tasks(tasks, cfg.threads, rep);
  finish(rep, [&](Sink& s) {
    const std::string dg = fields_digest(corpora[1].fields);
    for (double sv : svals) {
      const std::string base = "C/s=" + num(sv) + "/K=";
      const double r = constant(rep, base + std::to_string(K2)) / constant(rep, base + std::to_string(K));
      if (sv < 0.5) s.le("s=" + num(sv) + "/C_ratio", dg, r, 1.5);
      else s.ge("s=" + num(sv) + "/C_ratio_increases", dg, r, 1.0);
    }
  });
  rep.notes.push_back("fields have no k' = 0 modes so the indicator product keeps zero mean");
}

// ----------------------------------------------------------------- reflection

void suite_reflection(const HarnessConfig& cfg, Report& rep) {
  const std::string dg = text_digest("reflection nodes -1/(j+1)");
  std::vector<Task> tasks;
  tasks.push_back([&](Sink& s) {
    for (int m = 0; m <= 6; ++m) {
      const ReflectionCoeffs rc = reflection_coefficients(m);
      s.le("m=" + std::to_string(m) + "/moment_residual", dg, rc.moment_residual(), 1e-9);
      // Lagrange basis at 1 on the nodes x_i = -1/(i+1), one product per weight.
      double err = 0.0;
      for (int j = 0; j <= m; ++j) {
        const double xj = -1.0 / (j + 1);
        double l = 1.0;
        for (int i = 0; i <= m; ++i)
          if (i != j) {
            const double xi = -1.0 / (i + 1);
            l *= (1.0 - xi) / (xj - xi);
          }
        err = std::max(err, std::abs(rc.alpha[j] - l));
      }
      s.le("m=" + std::to_string(m) + "/lagrange_oracle", dg, err, 1e-9);
    }
    const std::vector<std::vector<double>> literal{{-3.0, 4.0}, {6.0, -32.0, 27.0}};
    for (int m = 1; m <= 2; ++m) {
      const ReflectionCoeffs rc = reflection_coefficients(m);
      double err = 0.0;
      for (int j = 0; j <= m; ++j) err = std::max(err, std::abs(rc.alpha[j] - literal[m - 1][j]));
      s.le("m=" + std::to_string(m) + "/literal", dg, err, 1e-9);
    }
  });
  run_tasks(tasks, cfg.threads, rep);
}

// ----------------------------------------------------------------- projection

double restriction_tol(double residual) { return 1e-10 + residual / std::sqrt(1.0 - residual * residual); }

double grid_max_rows(const Field& u, int M, int from, int to) {
  const SampleGrid g = sample_grid(u, M);
  double m = 0.0;
  for (std::size_t f = 0; f < g.values.size(); ++f) {
    const int iv = g.vertical_index(f);
    if (iv >= from && iv < to) m = std::max(m, std::abs(g.values[f]));
  }
  return m;
}

// L^p norm (s = 0) or gradient L^2 norm (s = 1) over `domain`.
double ext_norm(const Field& u, double sv, double p, Domain domain, Quadrature quad) {
  if (sv == 0.0) return lp_norm(u, p, domain, quad);
  double acc = 0.0;
  for (int i = 0; i < u.lattice().n; ++i) acc += std::pow(lp_norm(derivative(u, unit(u.lattice().n, i)), 2.0, domain, quad), 2);
  return std::sqrt(acc);
}

void suite_projection(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const int M = cfg.grid_size(lat.K);
  const ExtendOptions eo = grid_options(M);
  const Corpus bumps = corpus(cfg, CorpusKind::boundary_bump, 6, lat);
  const Corpus sines = corpus(cfg, CorpusKind::sine_strip, 6, lat);
  const std::vector<int> kh = first_horizontal(lat);
  const Field upper = strip_bump(lat, lat.L / 4, kh, lat.K);
  const Field lower = strip_bump(lat, -lat.L / 4, kh, lat.K);
  std::vector<Task> tasks;
  for (const Corpus* c : {&bumps, &sines})
    for (std::size_t i = 0; i < c->size(); ++i)
      tasks.push_back([&, c, i](Sink& s) {
        for (int m = 0; m <= 4; ++m) {
          const Projection e = extend_reflect(c->half(i), m, Side::upper, eo);
          s.le(std::string(to_string(c->kind)) + "/field_" + std::to_string(i) + "/m=" + std::to_string(m) +
                   "/restriction",
               field_digest(c->fields[i]), restriction_mismatch(e.field, c->fields[i], M), restriction_tol(e.residual));
        }
      });
  tasks.push_back([&](Sink& s) {
    const std::string dg = field_digest(upper);
    for (int m : {0, 1}) {
      const Projection p = project_zero(upper, m, eo);
      const Projection pp = project_zero(p.field, m, eo);
      const double scale = upper.max_abs_coeff();
      s.le("upper_bump/m=" + std::to_string(m) + "/fixed_point", dg, (p.field - upper).max_abs_coeff() / scale, 1e-8);
      s.le("upper_bump/m=" + std::to_string(m) + "/idempotent", dg, (pp.field - p.field).max_abs_coeff() / scale, 1e-8);
    }
  });
  tasks.push_back([&](Sink& s) {
    const std::string dg = field_digest(lower);
    const Projection pl = project_zero(lower, 0, eo);
    s.le("lower_bump/annihilated", dg, pl.field.max_abs_coeff() / lower.max_abs_coeff(), 1e-8,
         "P0 b = b - E^-b vanishes below the boundary but equals -b(x', -x_n) above it");
    s.le("lower_bump/vanishes_below", dg, grid_max_rows(pl.field, M, M / 2 + 1, M) / lower.max_abs_coeff(),
         1e-8 + pl.residual);
    const Field ext = extend_reflect(make_half_field(mirror_vertical(lower), M), 0, Side::upper, eo).field;
    const Field e_minus = mirror_vertical(ext);
    s.le("lower_bump/kernel_E_minus", dg, project_zero(e_minus, 0, eo).field.max_abs_coeff() / e_minus.max_abs_coeff(),
         1e-8);
  });
  const Corpus rnd = corpus(cfg, CorpusKind::random_bandlimited, 5, lat);
  for (std::size_t i = 0; i < rnd.size(); ++i)
    tasks.push_back([&, i](Sink& s) {
      const Field& u = rnd.fields[i];
      std::mt19937_64 rng(cfg.seed + 1000 + i);
      for (int m : {0, 1, 3}) {
        const PointFunction p = project_zero_pointwise([&u](std::span<const double> x) { return evaluate(u, x); }, lat, m);
        const PointFunction pp = project_zero_pointwise(p, lat, m);
        double err = 0.0;
        for (int t = 0; t < 10; ++t) {
          const auto x = random_point(rng, lat.n, -lat.L / 2, lat.L / 2);
          err = std::max(err, std::abs(pp(x) - p(x)) / (1.0 + std::abs(p(x))));
        }
        s.le("random/field_" + std::to_string(i) + "/m=" + std::to_string(m) + "/idempotent_pointwise", field_digest(u),
             err, 1e-8);
      }
    });
  // Extension norm ratios ||E_m u||_X(torus) / ||u||_X(strip) on bumps, K/2 and K.
  const int Kh = lat.K / 2;
  std::vector<Corpus> ext_corpora{corpus(cfg, CorpusKind::boundary_bump, 4, cfg.lattice(Kh)),
                                  corpus(cfg, CorpusKind::boundary_bump, 4, lat)};
  const std::vector<std::pair<double, double>> sp{{0.0, 2.0}, {0.0, 4.0}, {1.0, 2.0}};
  for (std::size_t li = 0; li < ext_corpora.size(); ++li)
    for (int m : {1, 3})
      tasks.push_back([&, li, m](Sink& s) {
        const Corpus& c = ext_corpora[li];
        const Quadrature quad = cfg.quadrature(c.lattice.K);
        const ExtendOptions o = grid_options(quad.M);
        for (std::size_t i = 0; i < c.size(); ++i) {
          const Field e = extend_reflect(c.half(i), m, Side::upper, o).field;
          for (auto [sv, p] : sp) {
            const double r = ext_norm(e, sv, p, Domain::whole, quad) / ext_norm(c.fields[i], sv, p, Domain::halfspace, quad);
            s.max("C/m=" + std::to_string(m) + "/s=" + num(sv) + "/p=" + num(p) + "/K=" + std::to_string(c.lattice.K), r);
          }
        }
      });
  run_tasks(tasks, cfg.threads, rep);
  finish(rep, [&](Sink& s) {
    for (int m : {1, 3})
      for (auto [sv, p] : sp) {
        const std::string base = "C/m=" + std::to_string(m) + "/s=" + num(sv) + "/p=" + num(p) + "/K=";
        const double r = constant(rep, base + std::to_string(lat.K)) / constant(rep, base + std::to_string(Kh));
        s.within("extension_m=" + std::to_string(m) + "/s=" + num(sv) + "/p=" + num(p) + "/stability",
                 ext_corpora[1].digest(), r, 0.5, 2.0);
      }
  });
}

// ---------------------------------------------------------------------- trace

void suite_trace(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const Lattice b = boundary_lattice(lat);
  const Corpus gs = corpus(cfg, CorpusKind::random_bandlimited, 20, b, 2.5);
  const Corpus sines = corpus(cfg, CorpusKind::sine_strip, 10, lat);
  std::vector<Task> tasks;
  tasks.push_back([&](Sink& s) {
    double diff = 0.0;
    for (const Field& g : gs.fields) diff = std::max(diff, (trace(poisson_extend(g)) - g).max_abs_coeff());
    s.le("trace_of_extension_is_identity", gs.digest(), diff, 0.0);
    double tz = 0.0;
    for (const Field& u : sines.fields) tz = std::max(tz, trace(u).max_abs_coeff() / u.max_abs_coeff());
    s.le("sine_corpus_trace_vanishes", sines.digest(), tz, 1e-15);
  });
  tasks.push_back([&](Sink& s) {
    std::mt19937_64 rng(cfg.seed + 7);
    double lap = 0.0, semi = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(5, gs.size()); ++i) {
      const PoissonField pf = poisson_extend(gs.fields[i]);
      const double a = 0.37, c = 1.21;
      const PoissonField restarted = pf.at_depth(a);
      for (int t = 0; t < 10; ++t) {
        auto x = random_point(rng, lat.n, 0.0, lat.L / 2);
        Complex sum{};
        double scale = 0.0;
        for (int d = 0; d < lat.n; ++d) {
          const Complex v = pf.evaluate(x, unit(lat.n, d, 2));
          sum += v;
          scale = std::max(scale, std::abs(v));
        }
        lap = std::max(lap, std::abs(sum) / scale);
        x.back() = c;
        const Complex r1 = restarted.evaluate(x);
        x.back() = a + c;
        const Complex r2 = pf.evaluate(x);
        semi = std::max(semi, std::abs(r1 - r2) / (1.0 + std::abs(r2)));
      }
    }
    s.le("extension_is_harmonic", gs.digest(), lap, 1e-12);
    s.le("extension_semigroup", gs.digest(), semi, 1e-13);
  });
  tasks.push_back([&](Sink& s) {
    const Field g = Field::plane_wave(b, first_horizontal(lat));
    const MaterializedPoisson m = materialize_poisson(poisson_extend(g), lat);
    s.le("leakage_of_e^{ix1}", field_digest(g), std::abs(m.half.leakage - std::exp(-7.0 * kPi / 8.0)), 1e-6);
    s.set("materialize_residual/e^{ix1}", m.residual);
  });
  const Corpus tb = corpus(cfg, CorpusKind::boundary_bump, 2, lat);
  const Corpus tc = corpus(cfg, CorpusKind::cosine_strip, 2, lat);
  for (const Corpus* c : {&tb, &tc})
    for (std::size_t i = 0; i < c->size(); ++i)
      tasks.push_back([&, c, i](Sink& s) {
        const HalfField h = c->half(i);
        for (double sv : {0.7, 1.2}) {
          const double bnd = besov_norm(trace(h.field), SpaceSpec{Family::B, sv - 0.5, 2.0, 2.0});
          const double rn = restriction_norm(h, SpaceSpec{Family::H, sv, 2.0, 2.0, Domain::halfspace}).value;
          s.max("C/trace_estimate", bnd / rn);
        }
      });
  for (std::size_t i = 0; i < 2; ++i)
    tasks.push_back([&, i](Sink& s) {
      const Field& g = gs.fields[i];
      const MaterializedPoisson m = materialize_poisson(poisson_extend(g), lat);
      s.max("materialize_residual/corpus", m.residual);
      for (double p : {2.0, 4.0})
        for (double sv : {0.5, 1.0, 1.5}) {
          const double lhs = restriction_norm(m.half, SpaceSpec{Family::Hdot, sv, p, 2.0, Domain::halfspace}).value;
          const double rhs = besov_norm(g, SpaceSpec{Family::Bdot, sv - 1.0 / p, p, p});
          s.max("C/harmonic_extension", lhs / rhs);
        }
    });
  run_tasks(tasks, cfg.threads, rep);
  finish(rep, [&](Sink& s) {
    s.le("trace_estimate_constant", fields_digest(tb.fields), constant(rep, "C/trace_estimate"), 20.0);
  });
  rep.notes.push_back("trace estimate in B^{s-1/2}_{2,2} against H^{s,2} of the strip, s in {0.7, 1.2}");
}

// --------------------------------------------------------------------- poisson

void suite_poisson(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const double vol = std::pow(lat.L, lat.n);
  std::vector<Task> tasks;
  const std::vector<std::vector<int>> modes{{1, 0}, {3, 4}, {0, 12}};
  for (const auto& k2 : modes)
    tasks.push_back([&, k2](Sink& s) {
      std::vector<int> k(lat.n, 0);
      k[0] = k2[0];
      k[1] = k2[1];
      const Field u = Field::plane_wave(lat, k);
      const double w = lat.freq_scale() * std::hypot(k2[0], k2[1]);
      for (const auto& [sv, alpha, p] : std::vector<std::tuple<double, double, double>>{
               {0.5, 0.0, 2.0}, {1.0, 0.5, 2.0}, {1.5, 2.0, 4.0}, {0.25, 1.0, 1.0}}) {
        const double q = p;
        // int_0^inf (t^s w^alpha e^{-tw})^q dt/t = w^{(alpha-s)q} Gamma(sq) / q^{sq}.
        const double oracle =
            std::pow(w, alpha - sv) * std::pow(std::tgamma(sv * q) / std::pow(q, sv * q), 1.0 / q) * std::pow(vol, 1.0 / p);
        const double v = poisson_besov_norm(u, sv, alpha, p, q, {}, cfg.quadrature(lat.K));
        s.le("mode=(" + std::to_string(k2[0]) + "," + std::to_string(k2[1]) + ")/s=" + num(sv) + "/alpha=" + num(alpha) +
                 "/p=" + num(p),
             field_digest(u), std::abs(v - oracle) / oracle, 1e-6);
      }
    });
  const Corpus c = corpus(cfg, CorpusKind::random_bandlimited, 6, lat);
  for (const auto& [sv, p, q] : std::vector<std::tuple<double, double, double>>{
           {0.5, 2.0, 2.0}, {1.0, 2.0, 1.0}, {0.7, 4.0, 2.0}, {1.5, 4.0 / 3.0, 4.0}})
    tasks.push_back([&, sv, p, q](Sink& s) {
      const Quadrature quad = cfg.quadrature(lat.K);
      for (std::size_t i = 0; i < c.size(); ++i) {
        const Field& u = c.fields[i];
        const double r = poisson_besov_norm(u, sv, 0.0, p, q, {}, quad) / besov_norm(u, SpaceSpec{Family::Bdot, -sv, p, q}, quad);
        s.within("s=" + num(sv) + "/p=" + num(p) + "/q=" + num(q) + "/field_" + std::to_string(i) + "/ratio_vs_Bdot^{-s}",
                 field_digest(u), r, 0.1, 10.0);
        s.max("ratio_max", r);
        s.min("ratio_min", r);
      }
    });
  run_tasks(tasks, cfg.threads, rep);
}

// ------------------------------------------------------------------ resolvent

Complex eigen_oracle(const Field& f, Complex lambda, BoundaryCondition bc, const std::vector<double>& x) {
  const Lattice& lat = f.lattice();
  const double sc = lat.freq_scale();
  std::vector<int> k(lat.n);
  Complex sum{};
  for (std::size_t flat = 0; flat < f.coeffs().size(); ++flat) {
    lat.decode(flat, k);
    const int m = k.back();
    if (m < 0) continue;
    const Complex cp = f.coeffs()[flat];
    k.back() = -m;
    const Complex cm = f.coeff(k);
    double phase = 0.0, ev = 0.0;
    for (int i = 0; i < lat.n; ++i) {
      const int ki = i + 1 < lat.n ? k[i] : m;
      ev += sc * sc * ki * ki;
      if (i + 1 < lat.n) phase += sc * ki * x[i];
    }
    const Complex h = std::exp(Complex{0.0, phase});
    if (bc == BoundaryCondition::dirichlet) {
      if (m == 0) continue;
      sum += Complex{0.0, 1.0} * (cp - cm) / (lambda + ev) * h * std::sin(sc * m * x.back());
    } else {
      sum += (m == 0 ? cp : cp + cm) / (lambda + ev) * h * std::cos(sc * m * x.back());
    }
  }
  return sum;
}

const std::array<double, 4> kThetas{0.0, 0.25, 0.5, 0.74};  // multiples of pi
const std::array<double, 4> kMagnitudes{0.1, 1.0, 10.0, 100.0};

void suite_resolvent_identity(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const ExtendOptions eo = grid_options(cfg.grid_size(lat.K));
  const Corpus sines = corpus(cfg, CorpusKind::sine_strip, 3, lat);
  const Corpus cosines = corpus(cfg, CorpusKind::cosine_strip, 3, lat);
  std::vector<Task> tasks;
  for (auto bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann})
    for (double th : kThetas)
      for (double a : kMagnitudes)
        tasks.push_back([&, bc, th, a](Sink& s) {
          const Corpus& c = bc == BoundaryCondition::dirichlet ? sines : cosines;
          const Complex lam = a * std::exp(Complex{0.0, th * kPi});
          const SectorPoint sp(lam, 0.5 * (th * kPi + kPi));
          std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(1000 * th + a));
          double err = 0.0, scale = 0.0, interior = 0.0, boundary = 0.0, refl = 0.0;
          for (std::size_t i = 0; i < c.size(); ++i) {
            const HalfField f = c.half(i);
            const ResolventSolution sol = resolvent_halfspace(f, sp, bc, eo);
            for (int t = 0; t < 20; ++t) {
              const auto x = random_point(rng, lat.n, 0.0, lat.L / 2);
              const Complex ref = eigen_oracle(f.field, lam, bc, x);
              err = std::max(err, std::abs(evaluate(sol.u.field, x) - ref));
              scale = std::max(scale, std::abs(ref));
            }
            const ResolventResidual r = resolvent_residual(sol, f, lam, bc);
            interior = std::max(interior, r.interior);
            boundary = std::max(boundary, r.boundary);
            refl = std::max(refl, sol.reflection_residual);
          }
          const std::string id = std::string(to_string(bc)) + "/theta=" + num(th) + "pi/|lambda|=" + num(a);
          s.le(id + "/image_vs_eigenbasis", c.digest(), err / scale, 1e-10);
          s.le(id + "/interior_residual", c.digest(), interior, 1e-9 + refl);
          s.le(id + "/boundary_residual", c.digest(), boundary, 1e-9 + refl);
        });
  run_tasks(tasks, cfg.threads, rep);
}

void suite_resolvent_estimate(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const ExtendOptions eo = grid_options(cfg.grid_size(lat.K));
  const Corpus sines = corpus(cfg, CorpusKind::sine_strip, 6, lat);
  const Corpus cosines = corpus(cfg, CorpusKind::cosine_strip, 6, lat);
  auto key = [](BoundaryCondition bc, double th) { return std::string(to_string(bc)) + "/theta=" + num(th) + "pi"; };
  std::vector<Task> tasks;
  for (auto bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann})
    for (double th : kThetas)
      for (double a : kMagnitudes)
        tasks.push_back([&, bc, th, a](Sink& s) {
          const Corpus& c = bc == BoundaryCondition::dirichlet ? sines : cosines;
          const SectorPoint sp(a * std::exp(Complex{0.0, th * kPi}), 0.5 * (th * kPi + kPi));
          double cmax = 0.0;
          for (std::size_t i = 0; i < c.size(); ++i)
            cmax = std::max(cmax, resolvent_estimate_check(c.half(i), sp, bc, {}, eo).sum());
          s.set("c/" + key(bc, th) + "/|lambda|=" + num(a), cmax);
          s.max("c_mu/" + key(bc, th), cmax);
          s.min("c_min/" + key(bc, th), cmax);
        });
  run_tasks(tasks, cfg.threads, rep);
  finish(rep, [&](Sink& s) {
    for (auto bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann})
      for (double th : kThetas) {
        const Corpus& c = bc == BoundaryCondition::dirichlet ? sines : cosines;
        const double hi = constant(rep, "c_mu/" + key(bc, th)), lo = constant(rep, "c_min/" + key(bc, th));
        // |lambda + r| >= cos(theta/2) (|lambda| + r) for r >= 0 gives 1 + 1/2 + 1 per mode.
        s.le(key(bc, th) + "/c_mu", c.digest(), hi, 2.5 / std::cos(0.5 * th * kPi));
        s.le(key(bc, th) + "/uniformity", c.digest(), hi / lo, 1.5,
             th > 0.0 ? "the lattice spectrum |xi|^2 >= 1 keeps small |lambda| away from resonance" : "");
      }
  });
  rep.notes.push_back("c(|lambda|) = max over the corpus of |lambda| ||u|| + |lambda|^{1/2} ||grad u|| + ||Delta u||, over ||f||");
}

void suite_resolvent(const HarnessConfig& cfg, Report& rep) {
  suite_resolvent_identity(cfg, rep);
  suite_resolvent_estimate(cfg, rep);
  finish(rep, [&](Sink& s) {
    const Lattice lat = cfg.lattice();
    const HalfField zero{Field(lat), 0.0, 0.0};
    for (auto bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
      const ResolventSolution sol = resolvent_halfspace(zero, SectorPoint(1.0, 1.0), bc, grid_options(cfg.grid_size(lat.K)));
      s.le(std::string(to_string(bc)) + "/zero_data_gives_zero", field_digest(zero.field), sol.u.field.max_abs_coeff(), 0.0);
    }
  });
}

// ------------------------------------------------------------------------ bvp

void suite_bvp(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const Lattice b = boundary_lattice(lat);
  const ExtendOptions eo = grid_options(cfg.grid_size(lat.K));
  const Corpus sines = corpus(cfg, CorpusKind::sine_strip, 4, lat);
  const Corpus cosines = corpus(cfg, CorpusKind::cosine_strip, 4, lat);
  const Corpus bumps = corpus(cfg, CorpusKind::boundary_bump, 4, lat);
  const Corpus gs = corpus(cfg, CorpusKind::random_bandlimited, 8, b, 2.5);
  std::vector<Task> tasks;
  for (auto bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann})
    for (const Corpus* c : {bc == BoundaryCondition::dirichlet ? &sines : &cosines, &bumps})
      for (std::size_t i = 0; i < c->size(); ++i)
        tasks.push_back([&, bc, c, i](Sink& s) {
          const HalfField f = c->half(i);
          const Field& g = gs.fields[i % gs.size()];
          auto solve = [&](RhsExtension rhs) {
            return bc == BoundaryCondition::dirichlet ? bvp_dirichlet(f, g, eo, rhs) : bvp_neumann(f, g, eo, rhs);
          };
          const BvpSolution sol = solve(RhsExtension::stored);
          const BvpResidual r = bvp_residual(sol, f, g);
          const std::string id = std::string(to_string(bc)) + "/" + std::string(to_string(c->kind)) + "/field_" +
                                 std::to_string(i);
          const std::string dg = text_digest(field_digest(f.field) + field_digest(g));
          s.le(id + "/interior_residual", dg, r.interior, 1e-8 + sol.leakage);
          s.le(id + "/boundary_mismatch", dg, r.boundary, 1e-8 + sol.leakage);
          s.max("materialize_residual", sol.materialize_residual);
          s.max("poisson_leakage", sol.poisson_leakage);
          if (c->kind == CorpusKind::boundary_bump)
            s.max("parity_extension_residual/" + std::string(to_string(bc)), bvp_residual(solve(RhsExtension::parity), f, g).interior);
          double hess = 0.0;
          for (int d = 0; d < lat.n; ++d)
            for (int e = 0; e < lat.n; ++e) {
              std::vector<int> a(lat.n, 0);
              ++a[d];
              ++a[e];
              hess += std::pow(lp_norm(derivative(sol.u.field, a), 2.0, Domain::halfspace), 2);
            }
          const double order = bc == BoundaryCondition::dirichlet ? 2.0 : 1.0;
          const double rhs =
              lp_norm(f.field, 2.0, Domain::halfspace) + besov_norm(g, SpaceSpec{Family::Bdot, order - 0.5, 2.0, 2.0});
          s.max("C/estimate", std::sqrt(hess) / rhs);
        });
  for (auto bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann})
    tasks.push_back([&, bc](Sink& s) {
      const Field g = Field::plane_wave(b, first_horizontal(lat));
      const HalfField zero{Field(lat), 0.0, 0.0};
      const BvpSolution sol = bc == BoundaryCondition::dirichlet ? bvp_dirichlet(zero, g, eo) : bvp_neumann(zero, g, eo);
      std::mt19937_64 rng(cfg.seed + 11);
      const double sc = lat.freq_scale();
      double err = 0.0;
      for (int t = 0; t < 20; ++t) {
        const auto x = random_point(rng, lat.n, 0.0, lat.L / 2);
        err = std::max(err, std::abs(sol.evaluate(x) - std::exp(-sc * x.back()) * std::exp(Complex{0.0, sc * x[0]})));
      }
      s.le(std::string(to_string(bc)) + "/f=0,g=e^{ix1}", field_digest(g), err, 1e-10);
    });
  tasks.push_back([&](Sink& s) {
    const HalfField zero{Field(lat), 0.0, 0.0};
    const Field g0(b);
    s.le("dirichlet/zero_data_gives_zero", field_digest(zero.field), bvp_dirichlet(zero, g0, eo).u.field.max_abs_coeff(), 0.0);
    s.le("neumann/zero_data_gives_zero", field_digest(zero.field), bvp_neumann(zero, g0, eo).u.field.max_abs_coeff(), 0.0);
  });
  run_tasks(tasks, cfg.threads, rep);
  rep.notes.push_back("right-hand side extended by the stored torus field; the parity extension residual on bumps is logged");
}

// -------------------------------------------------------------------- scaling

void suite_scaling(const HarnessConfig& cfg, Report& rep) {
  const Lattice lat = cfg.lattice();
  const Corpus c = corpus(cfg, CorpusKind::random_bandlimited, 10, cfg.lattice(lat.K / 2));
  std::vector<Field> fields;
  for (const Field& u : c.fields) fields.push_back(u.embed(lat));
  const std::string dg = fields_digest(fields);
  std::vector<Task> tasks;
  for (double sv : cfg.s)
    tasks.push_back([&, sv](Sink& s) {
      double cell = 0.0, torus = 0.0;
      for (const Field& u : fields) {
        const double base = sobolev_norm(u, hdot(sv));
        const double want = std::pow(2.0, sv - lat.n / 2.0) * base;
        cell = std::max(cell, std::abs(dilated_cell_norm(u, 1, hdot(sv), cfg.quadrature(lat.K)) - want) / want);
        torus = std::max(torus, std::abs(sobolev_norm(dilate(u, 1), hdot(sv)) - std::pow(2.0, sv) * base) /
                                    (std::pow(2.0, sv) * base));
      }
      s.le("s=" + num(sv) + "/cell_norm_2^{s-n/2}", dg, cell, 1e-10);
      s.le("s=" + num(sv) + "/torus_norm_2^s", dg, torus, 1e-10);
    });
  run_tasks(tasks, cfg.threads, rep);
  rep.notes.push_back("u(2x) is L/2-periodic: one period cell carries 2^{s-n/2}, the full torus 2^s");
}

}  // namespace

const std::vector<SuiteDef>& suite_table() {
  static const std::vector<SuiteDef> table{
      {"lp_partition", "sum_j psi_j = 1 away from the origin, psi_j supported in 3 2^{j-2} <= |xi| <= 2^{j+3}/3",
       suite_lp_partition},
      {"reconstruction", "the sum of the Littlewood-Paley blocks reproduces the field", suite_reconstruction},
      {"plancherel", "sum_i ||d_i u||^2_{Hdot^{s,2}} = ||u||^2_{Hdot^{s+1,2}}", suite_plancherel},
      {"norm_equiv", "the Fdot^s_{p,2} norm is equivalent to the Hdot^{s,p} norm", suite_norm_equiv},
      {"holder", "||u||_{Hdot^{s,p}} <= ||u||^{1-theta}_{Hdot^{s0,p0}} ||u||^theta_{Hdot^{s1,p1}}", suite_holder},
      {"embedding", "Hdot^{n/4,2} embeds into L^4", suite_embedding},
      {"interp_real", "(Hdot^{s0,p}, Hdot^{s1,p})_{theta,q} = Bdot^s_{p,q} via the K-functional", suite_interp_real},
      {"strichartz_indicator", "multiplication by the half-space indicator is bounded on Hdot^{s,p} for -1+1/p < s < 1/p",
       suite_strichartz_indicator},
      {"reflection", "reflection weights solve sum_j alpha_j (-1/(j+1))^k = 1 for 0 <= k <= m", suite_reflection},
      {"projection", "the reflection extension inverts restriction; P0 = I - E^-[1_- .] maps onto upper-supported fields",
       suite_projection},
      {"trace", "the trace of the harmonic extension is the identity; ||u(.,0)||_{B^{s-1/2}_{2,2}} <= C ||u||_{H^{s,2}}",
       suite_trace},
      {"poisson", "t^s (-Delta)^{alpha/2} e^{-t(-Delta)^{1/2}} u in L^q(dt/t; L^p) characterizes Bdot^{alpha-s}_{p,q}",
       suite_poisson},
      {"resolvent",
       "the parity extension intertwines the half-space and whole-space resolvents; "
       "|lambda| ||u|| + |lambda|^{1/2} ||grad u|| + ||Delta u|| <= c_mu ||f|| in the sector",
       suite_resolvent},
      {"bvp", "u = (-Delta)^{-1} F + w with w harmonic solves the Dirichlet and Neumann problems", suite_bvp},
      {"scaling", "||u(2 .)||_{Hdot^{s,2}} = 2^{s-n/2} ||u||_{Hdot^{s,2}}", suite_scaling},
  };
  return table;
}

}  // namespace fsx::detail
