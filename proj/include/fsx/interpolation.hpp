// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "fsx/lattice.hpp"
#include "fsx/norms.hpp"

namespace fsx {

/// Compatible pair (X0, X1) over one domain.
struct Couple {
  SpaceSpec x0;
  SpaceSpec x1;
};

enum class KKind { upper_dyadic, exact_hilbert, best };

struct KCurve {
  std::vector<double> t;
  std::vector<double> values;
  KKind kind = KKind::upper_dyadic;

  /// Largest relative violation of "K nondecreasing" and "K(t)/t
  /// nonincreasing" along the grid; 0 for a concave-type curve.
  double monotonicity_defect() const;
};

/// Geometric t-grid and trapezoid rule in log t.
struct LogGrid {
  int octaves = 20;  // t in [2^-octaves, 2^octaves]
  int points = 81;

  std::vector<double> nodes() const;
};

/// Dyadic-split candidates for K(t, u; X0, X1), each a pair (||a||_X0, ||b||_X1)
/// for u = a + b. Evaluating the table at t is the minimum of the affine
/// functions A + t B, an upper bound on the true K-functional.
class DyadicSplits {
 public:
  DyadicSplits(const Field& u, const Couple& c, Quadrature quad = {});

  double operator()(double t) const;
  const std::vector<std::pair<double, double>>& candidates() const { return cands_; }

 private:
  std::vector<std::pair<double, double>> cands_;
};

double k_functional_upper(const Field& u, const Couple& c, double t, Quadrature quad = {});

/// True for couples of p = 2 potential spaces (Lp, Hdot, H) on the whole torus.
bool is_hilbert_couple(const Couple& c);

/// Quadratic-mean functional (L^n sum |c_k|^2 w0^2 t^2 w1^2 / (w0^2 + t^2 w1^2))^{1/2};
/// K2 <= K <= sqrt(2) K2. Throws NotHilbertCouple.
double k_functional_exact_hilbert(const Field& u, const Couple& c, double t);

/// K on a grid. `best` takes min(dyadic bound, sqrt(2) K2) on Hilbert couples
/// and the dyadic bound otherwise.
KCurve k_curve(const Field& u, const Couple& c, KKind kind, const LogGrid& grid = {}, Quadrature quad = {});

/// || t^{-theta} K(t) ||_{L^q(dt/t)} with the tails outside the grid modelled as
/// K(t) ~ K(t_0) t / t_0 on the left and K(t) ~ K(t_1) on the right.
double real_interp_norm(const Field& u, const Couple& c, double theta, double q, const LogGrid& grid = {},
                        Quadrature quad = {});

/// Same functional for a curve already on hand.
double interp_functional(const KCurve& k, double theta, double q);

/// ||u||_{Hdot^{s,p}} / (||u||^{1-theta}_{Hdot^{s0,p0}} ||u||^theta_{Hdot^{s1,p1}}) with
/// (s, 1/p) on the segment between (s0, 1/p0) and (s1, 1/p1). Throws ZeroField.
double holder_check(const Field& u, double s0, double s1, double p0, double p1, double theta, Quadrature quad = {});

}  // namespace fsx
