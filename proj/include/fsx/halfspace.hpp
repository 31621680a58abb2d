// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsx/lattice.hpp"
#include "fsx/norms.hpp"

namespace fsx {

/// Higher-order reflection weights: alpha_j = l_j(1) for the Lagrange basis
/// on the nodes -1/(j+1), j = 0..m.
struct ReflectionCoeffs {
  int m = 0;
  std::vector<double> alpha;

  /// max over kappa in [0, m] of |sum_j alpha_j (-1/(j+1))^kappa - 1|.
  double moment_residual() const;
  /// Weights alpha_j (-1/(j+1))^ell of the shifted operator that satisfies
  /// d^ell/dx_n^ell E u = E^(ell) d^ell/dx_n^ell u.
  ReflectionCoeffs shifted(int ell) const;
};

/// Throws IllConditioned for m > 8.
ReflectionCoeffs reflection_coefficients(int m);

/// Field read on the strip 0 <= x_n <= L/2, with the far-face leakage
/// max |u| over L/2 - L/16 <= x_n <= L/2 and the strip peak.
struct HalfField {
  Field field;
  double leakage = 0.0;
  double peak = 0.0;

  bool half_space_like(double rel_tol = 1e-8) const { return leakage <= rel_tol * peak; }
};

HalfField make_half_field(const Field& u, int M = 0);

nlohmann::json half_field_to_json(const HalfField& u);
HalfField half_field_from_json(const nlohmann::json& j);

enum class Side { upper, lower };
enum class Parity { odd, even };

struct ExtendOptions {
  int M = 0;  // 0 picks default_grid_size(K)
  /// Throw LeakageTooLarge when leakage > max_leakage * peak.
  std::optional<double> max_leakage;
};

/// Reflection extension. `upper` keeps u on x_n >= 0 and fills x_n < 0 with
/// sum_j alpha_j u(x', -x_n/(j+1)); `lower` is the mirror operator acting on
/// data from x_n <= 0. The seam x_n = +-L/2 takes the mean of its one-sided
/// values. Samples are projected back onto the lattice of u.
Projection extend_reflect(const HalfField& u, const ReflectionCoeffs& coeffs, Side side = Side::upper,
                          ExtendOptions opt = {});
Projection extend_reflect(const HalfField& u, int m, Side side = Side::upper, ExtendOptions opt = {});

/// ||extension - data||_{L^2(strip)} / ||extension||_{L^2(torus)} on the
/// M-grid; bounded by the projection residual of the extension.
double restriction_mismatch(const Field& extension, const Field& data, int M = 0);

/// u(x', -x_n).
Field mirror_vertical(const Field& u);

/// Exact piecewise formula of the extension, for pointwise checks.
PointFunction reflect_pointwise(PointFunction data, const Lattice& lat, const ReflectionCoeffs& coeffs, Side side);

/// u - E^-[1_{x_n<0} u] sampled and projected.
Projection project_zero(const Field& u, int m, ExtendOptions opt = {});
/// Same operator evaluated exactly at single points.
PointFunction project_zero_pointwise(PointFunction u, const Lattice& lat, int m);

/// Odd (Dirichlet) or even (Neumann) reflection across x_n = 0.
Projection reflect_parity(const HalfField& u, Parity parity, int M = 0);

/// 1_{0 <= x_n < L/2} u, projected onto the lattice with bandlimit factor * K.
Projection indicator_multiply(const Field& u, int factor = 4);

/// Smooth cut-off on the lower strip: 1 near x_n = 0, 0 near x_n = -L/2.
double lower_window(double x_n, double L);

struct RestrictionNorm {
  double value = 0.0;  // min over the witness set, an upper bound
  std::string witness;
  std::optional<double> lower_bound;  // exact strip value for the Lp family
  std::vector<std::pair<std::string, double>> candidates;
};

/// Quotient norm estimate inf ||U||_X(whole) over the extensions U of u in a
/// finite witness set: E for m = 0..4 (plain and windowed), E_D, E_N and the
/// zero extension. Candidates with a mean are skipped for homogeneous spaces.
RestrictionNorm restriction_norm(const HalfField& u, const SpaceSpec& spec, Quadrature quad = {});

}  // namespace fsx
