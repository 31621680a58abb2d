// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string_view>

#include "fsx/halfspace.hpp"
#include "fsx/norms.hpp"
#include "fsx/trace_poisson.hpp"

namespace fsx {

enum class BoundaryCondition { dirichlet, neumann };

std::string_view to_string(BoundaryCondition bc);
/// "dirichlet" | "neumann"; throws ConfigError otherwise.
BoundaryCondition parse_boundary_condition(std::string_view text);

/// lambda in the sector |arg lambda| < mu. Throws InvalidParameter unless
/// 0 < mu < pi, SpectrumHit for lambda in (-inf, 0], InvalidParameter when
/// lambda lies outside the sector.
struct SectorPoint {
  Complex lambda;
  double mu;

  SectorPoint(Complex lambda, double mu);
};

struct ResolventSolution {
  HalfField u;
  /// Parity extension of u over the torus; solves (lambda - Delta) U = E f.
  Field extended;
  /// Projection residual of the reflected right-hand side.
  double reflection_residual = 0.0;
};

/// Method of images: odd reflection for Dirichlet, even for Neumann.
ResolventSolution resolvent_halfspace(const HalfField& f, const SectorPoint& lambda, BoundaryCondition bc,
                                      ExtendOptions opt = {});

/// Strip checks of a resolvent solution: ||(lambda - Delta) u - f||_{L^2(strip)}
/// relative to ||f||, and the boundary quantity (u for Dirichlet, d_n u for
/// Neumann) on both faces x_n = 0 and x_n = L/2, relative to max |u|.
struct ResolventResidual {
  double interior = 0.0;
  double boundary = 0.0;
};
ResolventResidual resolvent_residual(const ResolventSolution& sol, const HalfField& f, Complex lambda,
                                     BoundaryCondition bc);

struct ResolventRatios {
  double r0 = 0.0;    // |lambda| ||u|| / ||f||
  double r1 = 0.0;    // |lambda|^{1/2} ||grad u|| / ||f||
  double r2 = 0.0;    // ||grad^2 u|| / ||f||
  double rlap = 0.0;  // ||Delta u|| / ||f||
  double sum() const { return r0 + r1 + rlap; }
};

/// Ratios in the norm `norm` of the parity extensions (default L^2; on the
/// strip this differs from the torus value by the same factor in numerator
/// and denominator). Throws ZeroField for f = 0.
ResolventRatios resolvent_estimate_check(const HalfField& f, const SectorPoint& lambda, BoundaryCondition bc,
                                         const SpaceSpec& norm = {}, ExtendOptions opt = {});

/// Extension F of the strip right-hand side used for v = (-Delta)^{-1} F.
/// `stored`: the torus field carried by the HalfField (equal to E_D f or
/// E_N f on sine or cosine data). `parity`: E_D for Dirichlet, E_N for
/// Neumann; its jump or kink at x_n = 0 limits accuracy when f(x', 0) != 0
/// or d_n f(x', 0) != 0.
enum class RhsExtension { stored, parity };

/// u = v + w with v = (-Delta)^{-1} F on the torus and w an exact harmonic
/// correction fixing the boundary datum. `u` is v + w materialized.
struct BvpSolution {
  BoundaryCondition bc;
  Field v;
  PoissonField w;
  HalfField u;
  double materialize_residual = 0.0;
  /// Far-face leakage of f, absolute: the periodic-image error of v.
  double leakage = 0.0;
  /// Far-face leakage of w, absolute: affects only the materialized u.
  double poisson_leakage = 0.0;

  /// d^alpha (v + w) at x, with w evaluated per mode.
  Complex evaluate(std::span<const double> x, std::span<const int> alpha = {}) const;
};

/// Dirichlet: gamma_0 u = g. Neumann: d_nu u = g with nu = -e_n.
/// Throws HomogeneousDCViolation when F or g has a mean, LeakageTooLarge
/// when opt.max_leakage is set and exceeded.
BvpSolution bvp_dirichlet(const HalfField& f, const Field& g, ExtendOptions opt = {},
                          RhsExtension rhs = RhsExtension::stored);
BvpSolution bvp_neumann(const HalfField& f, const Field& g, ExtendOptions opt = {},
                        RhsExtension rhs = RhsExtension::stored);

/// Absolute residuals: ||-Delta u - f||_{L^2(strip)} and the L^inf boundary
/// mismatch, computed from v on the lattice and w per mode.
struct BvpResidual {
  double interior = 0.0;
  double boundary = 0.0;
};
BvpResidual bvp_residual(const BvpSolution& sol, const HalfField& f, const Field& g);

/// int_strip grad u . conj(grad v) on the strip quadrature.
Complex energy_form(const HalfField& u, const HalfField& v, Quadrature quad = {});

}  // namespace fsx
