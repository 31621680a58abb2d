// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "fsx/halfspace.hpp"
#include "fsx/interpolation.hpp"
#include "fsx/lattice.hpp"

namespace fsx {

/// Harmonic extension of mean-free boundary data, kept as a mode list:
/// u(x', x_n) = sum_{k' != 0} c_{k'} e^{-x_n |xi'|} e^{i xi'.x'}.
class PoissonField {
 public:
  /// `boundary` lives on an (n-1)-dimensional lattice and has no mean.
  explicit PoissonField(Field boundary);

  const Field& boundary() const { return boundary_; }
  int dim() const { return boundary_.lattice().n + 1; }

  /// Partial derivative d^alpha at x (alpha empty = value); derivatives are
  /// exact per mode: (i xi')^{alpha'} (-|xi'|)^{alpha_n}.
  Complex evaluate(std::span<const double> x, std::span<const int> alpha = {}) const;
  /// Boundary field of the slice x_n = depth.
  Field slice(double depth) const;
  /// Restarts the flow from the slice at `depth`.
  PoissonField at_depth(double depth) const { return PoissonField(slice(depth)); }

 private:
  Field boundary_;
};

/// gamma_0 u = u(., 0): sum over k_n of c_(k', k_n). Throws DimensionTooSmall for n < 2.
Field trace(const Field& u);
Field trace(const PoissonField& u);
/// d/dx_n u at x_n = 0.
Field normal_trace(const Field& u);

/// Throws HomogeneousDCViolation when g has a mean.
PoissonField poisson_extend(const Field& g);

struct MaterializedPoisson {
  HalfField half;
  double residual = 0.0;
};

/// Samples the strip 0 <= x_n <= L/2 on the grid of `lat`, fills the lower
/// strip with the windowed order-`order` reflection and projects. Leakage is
/// read from the exact samples.
MaterializedPoisson materialize_poisson(const PoissonField& pf, const Lattice& lat, int order = 6);

/// || t -> || t^s (-Delta)^{alpha/2} e^{-t (-Delta)^{1/2}} u ||_{L^p} ||_{L^q(dt/t)} on the
/// log t-grid; the t -> 0 tail is modelled by F(t) ~ F(t_0) (t/t_0)^s and the
/// far tail is dropped (exponential decay).
double poisson_besov_norm(const Field& u, double s, double alpha, double p, double q, const LogGrid& grid = {},
                          Quadrature quad = {});

}  // namespace fsx
