// SPDX-License-Identifier: Apache-2.0
#include "fsx/solvers.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fsx/error.hpp"
#include "fsx/multipliers.hpp"

namespace fsx {

namespace {

std::vector<int> unit(int n, int i, int order = 1) {
  std::vector<int> a(n, 0);
  a[i] = order;
  return a;
}

// Mean below tolerance relative to the field scale is rounding: drop it.
void drop_mean(Field& u, double scale, const char* what) {
  const std::size_t mid = u.lattice().mode_count() / 2;
  if (std::abs(u.coeffs()[mid]) > 1e-10 * std::max(scale, 1e-300))
    throw HomogeneousDCViolation(std::string(what) + " has a nonzero mean");
  u.coeffs()[mid] = 0.0;
}

void check_leakage(const HalfField& f, const ExtendOptions& opt) {
  if (opt.max_leakage && f.leakage > *opt.max_leakage * f.peak)
    throw LeakageTooLarge("right-hand side leakage " + std::to_string(f.leakage) + " exceeds the bound");
}

Parity parity_of(BoundaryCondition bc) { return bc == BoundaryCondition::dirichlet ? Parity::odd : Parity::even; }

// Max of |samples| over the rows x_n = 0 and x_n = L/2.
double face_max(const SampleGrid& g) {
  const std::size_t cols = g.values.size() / g.M;
  double m = 0.0;
  for (std::size_t c = 0; c < cols; ++c)
    m = std::max({m, std::abs(g.values[c * g.M]), std::abs(g.values[c * g.M + g.M / 2])});
  return m;
}

double grid_max(const SampleGrid& g) {
  double m = 0.0;
  for (Complex v : g.values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

std::string_view to_string(BoundaryCondition bc) { return bc == BoundaryCondition::dirichlet ? "dirichlet" : "neumann"; }

BoundaryCondition parse_boundary_condition(std::string_view text) {
  if (text == "dirichlet") return BoundaryCondition::dirichlet;
  if (text == "neumann") return BoundaryCondition::neumann;
  throw ConfigError("unknown boundary condition '" + std::string(text) + "'");
}

SectorPoint::SectorPoint(Complex l, double m) : lambda(l), mu(m) {
  if (lambda.imag() == 0.0 && lambda.real() <= 0.0) throw SpectrumHit("lambda lies in the spectrum [0, inf) of -Delta");
  if (!(mu > 0.0 && mu < std::numbers::pi)) throw InvalidParameter("sector angle must lie in (0, pi)");
  if (!(std::abs(std::arg(lambda)) < mu)) throw InvalidParameter("lambda lies outside the sector");
}

ResolventSolution resolvent_halfspace(const HalfField& f, const SectorPoint& lambda, BoundaryCondition bc,
                                      ExtendOptions opt) {
  check_leakage(f, opt);
  const Projection ef = reflect_parity(f, parity_of(bc), opt.M);
  Field U = resolvent_wholespace(ef.field, lambda.lambda);
  HalfField u = make_half_field(U, opt.M);
  return {std::move(u), std::move(U), ef.residual};
}

ResolventResidual resolvent_residual(const ResolventSolution& sol, const HalfField& f, Complex lambda,
                                     BoundaryCondition bc) {
  const Field& U = sol.extended;
  const int n = U.lattice().n;
  const Field r = lambda * U - laplacian(U) - f.field;
  const double fn = lp_norm(f.field, 2.0, Domain::halfspace);
  ResolventResidual out;
  out.interior = fn == 0.0 ? lp_norm(r, 2.0, Domain::halfspace) : lp_norm(r, 2.0, Domain::halfspace) / fn;
  const int M = default_grid_size(U.lattice().K);
  if (bc == BoundaryCondition::dirichlet) {
    const SampleGrid g = sample_grid(U, M);
    const double peak = grid_max(g);
    out.boundary = peak == 0.0 ? 0.0 : face_max(g) / peak;
  } else {
    double peak = 0.0;
    for (int i = 0; i < n; ++i) peak = std::max(peak, grid_max(sample_grid(derivative(U, unit(n, i)), M)));
    const double face = face_max(sample_grid(derivative(U, unit(n, n - 1)), M));
    out.boundary = peak == 0.0 ? 0.0 : face / peak;
  }
  return out;
}

ResolventRatios resolvent_estimate_check(const HalfField& f, const SectorPoint& lambda, BoundaryCondition bc,
                                         const SpaceSpec& norm, ExtendOptions opt) {
  if (f.field.is_zero()) throw ZeroField("resolvent estimate needs f != 0");
  const ResolventSolution sol = resolvent_halfspace(f, lambda, bc, opt);
  const Field ef = reflect_parity(f, parity_of(bc), opt.M).field;
  const Field& U = sol.extended;
  const int n = U.lattice().n;
  auto N = [&](const Field& x) { return space_norm(x, norm); };
  const double fn = N(ef);
  if (fn == 0.0) throw ZeroField("reflected right-hand side vanishes");
  double g2 = 0.0, h2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const Field di = derivative(U, unit(n, i));
    g2 += std::pow(N(di), 2);
    for (int j = 0; j < n; ++j) h2 += std::pow(N(derivative(di, unit(n, j))), 2);
  }
  const double a = std::abs(lambda.lambda);
  return {a * N(U) / fn, std::sqrt(a) * std::sqrt(g2) / fn, std::sqrt(h2) / fn, N(laplacian(U)) / fn};
}

Complex BvpSolution::evaluate(std::span<const double> x, std::span<const int> alpha) const {
  const Field dv = alpha.empty() ? v : derivative(v, alpha);
  return fsx::evaluate(dv, x) + w.evaluate(x, alpha);
}

namespace {

BvpSolution solve_bvp(const HalfField& f, const Field& g, ExtendOptions opt, BoundaryCondition bc, RhsExtension rhs) {
  const Lattice& lat = f.field.lattice();
  if (lat.n < 2) throw DimensionTooSmall("boundary value problems need n >= 2");
  if (!(g.lattice() == make_lattice(lat.n - 1, lat.K, lat.L)))
    throw InvalidParameter("boundary datum must live on the boundary lattice of f");
  check_leakage(f, opt);
  if (!g.is_homogeneous_admissible()) throw HomogeneousDCViolation("boundary datum has a nonzero mean");

  Field ef = rhs == RhsExtension::stored ? f.field : reflect_parity(f, parity_of(bc), opt.M).field;
  drop_mean(ef, ef.max_abs_coeff(), "extended right-hand side");
  Field v = resolvent_wholespace(ef, Complex{});

  Field h(g.lattice());
  if (bc == BoundaryCondition::dirichlet) {
    h = g - trace(v);
  } else {
    // d_nu v = -d_n v at x_n = 0.
    h = g + normal_trace(v);
  }
  drop_mean(h, std::max(g.max_abs_coeff(), v.max_abs_coeff()), "boundary correction");
  if (bc == BoundaryCondition::neumann && !h.is_zero()) h = fractional_laplacian(h, -1.0);
  PoissonField w(std::move(h));

  const MaterializedPoisson mw = materialize_poisson(w, lat);
  HalfField u = make_half_field(v + mw.half.field, opt.M);
  return {bc, std::move(v), std::move(w), std::move(u), mw.residual, f.leakage, mw.half.leakage};
}

}  // namespace

BvpSolution bvp_dirichlet(const HalfField& f, const Field& g, ExtendOptions opt, RhsExtension rhs) {
  return solve_bvp(f, g, opt, BoundaryCondition::dirichlet, rhs);
}

BvpSolution bvp_neumann(const HalfField& f, const Field& g, ExtendOptions opt, RhsExtension rhs) {
  return solve_bvp(f, g, opt, BoundaryCondition::neumann, rhs);
}

BvpResidual bvp_residual(const BvpSolution& sol, const HalfField& f, const Field& g) {
  const Lattice& lat = sol.v.lattice();
  const int n = lat.n;
  BvpResidual out;
  const double v_part = lp_norm(-1.0 * laplacian(sol.v) - f.field, 2.0, Domain::halfspace);
  // Delta w cancels per mode; probe it on a fixed set of strip points.
  double w_part = 0.0;
  std::vector<double> x(n);
  for (int i = 0; i < 16; ++i) {
    for (int d = 0; d + 1 < n; ++d) x[d] = lat.L * std::fmod(0.618034 * (i + 1) * (d + 1), 1.0);
    x[n - 1] = 0.5 * lat.L * i / 15.0;
    Complex lap{};
    for (int d = 0; d < n; ++d) lap += sol.w.evaluate(x, unit(n, d, 2));
    w_part = std::max(w_part, std::abs(lap));
  }
  out.interior = v_part + w_part * std::sqrt(0.5 * std::pow(lat.L, n));

  Field mismatch(g.lattice());
  if (sol.bc == BoundaryCondition::dirichlet) {
    mismatch = trace(sol.v) + sol.w.boundary() - g;
  } else {
    const Field& a = sol.w.boundary();
    mismatch = (a.is_zero() ? a : fractional_laplacian(a, 1.0)) - normal_trace(sol.v) - g;
  }
  out.boundary = lp_norm(mismatch, INFINITY);
  return out;
}

Complex energy_form(const HalfField& u, const HalfField& v, Quadrature quad) {
  const Lattice& lat = u.field.lattice();
  if (!(lat == v.field.lattice())) throw InvalidParameter("energy form needs fields on the same lattice");
  const int M = quad.M > 0 ? quad.M : default_grid_size(lat.K);
  Complex sum{};
  for (int i = 0; i < lat.n; ++i) {
    const SampleGrid a = sample_grid(derivative(u.field, unit(lat.n, i)), M);
    const SampleGrid b = sample_grid(derivative(v.field, unit(lat.n, i)), M);
    for (std::size_t k = 0; k < a.values.size(); ++k)
      sum += quadrature_weight(a, k, Domain::halfspace) * a.values[k] * std::conj(b.values[k]);
  }
  return sum * std::pow(lat.L / M, lat.n);
}

}  // namespace fsx
