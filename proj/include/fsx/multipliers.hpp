// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <span>

#include "fsx/lattice.hpp"

namespace fsx {

/// Fourier symbol m(xi). `at_zero` is the value used for the zero frequency;
/// an empty optional marks the symbol as undefined there (e.g. |xi|^s, s < 0).
struct Symbol {
  std::function<Complex(std::span<const double>)> fn;
  std::optional<Complex> at_zero = Complex{1.0};
  /// When set, the symbol is also undefined on every frequency with xi' = 0
  /// (horizontal operators whose singular set is the vertical axis).
  bool undefined_on_vertical_axis = false;
};

/// Radial symbol helper: m(xi) = g(|xi|).
Symbol radial_symbol(std::function<double(double)> g, std::optional<Complex> at_zero);

/// c_k -> m(xi_k) c_k. Throws HomogeneousDCViolation when the symbol is
/// undefined on an occupied singular mode.
Field apply_symbol(const Field& u, const Symbol& m);

/// (-Delta)^{s/2}: symbol |xi|^s, undefined at zero (s != 0).
Field fractional_laplacian(const Field& u, double s);

/// (I - Delta)^{s/2}: symbol (1 + |xi|^2)^{s/2}.
Field bessel_potential(const Field& u, double s);

/// prod_i (i xi_i)^{alpha_i}.
Field derivative(const Field& u, std::span<const int> alpha);

/// Laplacian over the first n-1 (horizontal) coordinates.
Field horizontal_laplacian(const Field& u);

/// (-Delta')^{s/2}: symbol |xi'|^s, undefined wherever xi' = 0.
Field horizontal_fractional_laplacian(const Field& u, double s);

/// Solves (lambda - Delta) u = f mode-wise. lambda on the closed negative real
/// axis is rejected; lambda = 0 requires zero-mean f.
Field resolvent_wholespace(const Field& f, Complex lambda);

/// Full Laplacian Delta (symbol -|xi|^2).
Field laplacian(const Field& u);

}  // namespace fsx
