// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <string_view>

#include "fsx/lattice.hpp"
#include "fsx/littlewood_paley.hpp"

namespace fsx {

enum class Domain {
  whole,           // the full torus
  halfspace,       // the strip 0 <= x_n <= L/2
  halfspace_zero,  // same quadrature region; the field is read as zero below
};

enum class Family { Lp, Hdot, H, Bdot, B, Fdot };

/// Function-space descriptor. Lp ignores s and q; Fdot has inner exponent 2.
struct SpaceSpec {
  Family family = Family::Lp;
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;
  Domain domain = Domain::whole;

  bool homogeneous() const { return family == Family::Hdot || family == Family::Bdot || family == Family::Fdot; }
};

/// Parses "Bdot:s=0.5,p=2,q=1", "H:s=2,p=4", "Lp:p=inf". Exponents accept
/// decimals, "a/b" fractions and "inf".
SpaceSpec parse_space_spec(std::string_view text, Domain domain = Domain::whole);
std::string format_space_spec(const SpaceSpec& spec);
double parse_exponent(std::string_view text);
Domain parse_domain(std::string_view text);
std::string_view to_string(Domain d);
std::string_view to_string(Family f);

/// Finitely supported j -> a_j >= 0.
struct WeightedSeq {
  std::map<int, double> entries;
};

/// Quadrature options for L^p functionals; M = 0 picks default_grid_size(K).
struct Quadrature {
  int M = 0;
};

/// Weight of a sample in the strip quadrature: the trapezoid rule in x_n
/// (1/2 on the faces x_n = 0 and L/2), exact for band-limited integrands.
double quadrature_weight(const SampleGrid& g, std::size_t flat, Domain domain);

/// L^p norm on the M-grid: rectangle rule on the torus, trapezoid in x_n on
/// the strip (p = inf: max over samples).
double lp_norm(const Field& u, double p, Domain domain = Domain::whole, Quadrature quad = {});
/// Same functional applied to precomputed samples.
double lp_norm_samples(const SampleGrid& samples, double p, Domain domain = Domain::whole);

double besov_norm(const Field& u, const SpaceSpec& spec, Quadrature quad = {});
double sobolev_norm(const Field& u, const SpaceSpec& spec, Quadrature quad = {});
/// || (sum_j |2^{js} Delta_j u|^2)^{1/2} ||_{L^p}.
double triebel_norm(const Field& u, double s, double p, Domain domain = Domain::whole, Quadrature quad = {});
double seq_norm(const WeightedSeq& a, double s, double q);

/// Dispatches on spec.family.
double space_norm(const Field& u, const SpaceSpec& spec, Quadrature quad = {});

/// Norm of u(2^m x) over one of its period cells [0, L 2^{-m})^n, the torus
/// stand-in for the whole-space dilate. Only whole-domain specs are accepted.
double dilated_cell_norm(const Field& u, int m, const SpaceSpec& spec, Quadrature quad = {});

/// Bilinear (unconjugated) pairing. On the whole torus it is assembled from
/// Littlewood-Paley blocks with |j - j'| <= 1; on the half domains it is the
/// quadrature of u v over the strip.
Complex pairing(const Field& u, const Field& v, Domain domain = Domain::whole, Quadrature quad = {});

void check_exponent(double p);

}  // namespace fsx
