// SPDX-License-Identifier: Apache-2.0
#include "fsx/interpolation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "fsx/error.hpp"
#include "fsx/littlewood_paley.hpp"

namespace fsx {

namespace {

void check_theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw InvalidParameter("theta must lie in (0, 1)");
}

double weight(const SpaceSpec& x, double r) {
  switch (x.family) {
    case Family::Lp: return 1.0;
    case Family::Hdot: return x.s == 0.0 ? 1.0 : std::pow(r, x.s);
    case Family::H: return std::pow(1.0 + r * r, 0.5 * x.s);
    default: throw NotHilbertCouple("weight requested for a non-potential space");
  }
}

}  // namespace

double KCurve::monotonicity_defect() const {
  double defect = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double scale = std::max(values[i], 1e-300);
    defect = std::max(defect, (values[i - 1] - values[i]) / scale);
    const double prev = values[i - 1] / t[i - 1], cur = values[i] / t[i];
    defect = std::max(defect, (cur - prev) / std::max(prev, 1e-300));
  }
  return defect;
}

std::vector<double> LogGrid::nodes() const {
  if (points < 2 || octaves < 1) throw InvalidParameter("t-grid needs at least two points and one octave");
  std::vector<double> t(points);
  for (int i = 0; i < points; ++i) t[i] = std::exp2(-octaves + 2.0 * octaves * i / (points - 1));
  return t;
}

DyadicSplits::DyadicSplits(const Field& u, const Couple& c, Quadrature quad) {
  const double n0 = space_norm(u, c.x0, quad);
  const double n1 = space_norm(u, c.x1, quad);
  cands_.emplace_back(n0, 0.0);
  cands_.emplace_back(0.0, n1);
  if (u.is_zero()) return;
  const DyadicFamily fam = build_dyadic_family(u.lattice());
  // The smoother space takes the low frequencies.
  const bool low_to_x1 = c.x0.s <= c.x1.s;
  for (int j = fam.j_min; j <= fam.j_max + 1; ++j) {
    const Field low = low_pass(u, j, fam);
    const Field high = u - low;
    const Field& a = low_to_x1 ? high : low;
    const Field& b = low_to_x1 ? low : high;
    cands_.emplace_back(space_norm(a, c.x0, quad), space_norm(b, c.x1, quad));
  }
}

double DyadicSplits::operator()(double t) const {
  if (!(t > 0.0)) throw InvalidParameter("K-functional needs t > 0");
  double best = kInf;
  for (const auto& [a, b] : cands_) best = std::min(best, a + t * b);
  return best;
}

double k_functional_upper(const Field& u, const Couple& c, double t, Quadrature quad) {
  return DyadicSplits(u, c, quad)(t);
}

bool is_hilbert_couple(const Couple& c) {
  auto potential = [](const SpaceSpec& x) {
    return x.p == 2.0 && x.domain == Domain::whole &&
           (x.family == Family::Lp || x.family == Family::Hdot || x.family == Family::H);
  };
  return potential(c.x0) && potential(c.x1);
}

namespace {

// Nonzero modes as (L^n |c_k|^2, w0(k), w1(k)).
struct HilbertWeights {
  std::vector<std::array<double, 3>> modes;

  HilbertWeights(const Field& u, const Couple& c) {
    if (!is_hilbert_couple(c)) throw NotHilbertCouple("exact K-functional needs two p = 2 potential spaces");
    const bool homogeneous = (c.x0.homogeneous() && c.x0.s != 0.0) || (c.x1.homogeneous() && c.x1.s != 0.0);
    if (homogeneous && !u.is_homogeneous_admissible())
      throw HomogeneousDCViolation("homogeneous couple applied to a field with a mean");
    const Lattice& lat = u.lattice();
    const std::size_t dc = lat.mode_count() / 2;
    const double vol = std::pow(lat.L, lat.n);
    for (std::size_t f = 0; f < u.coeffs().size(); ++f) {
      const double a2 = std::norm(u.coeffs()[f]);
      if (a2 == 0.0 || (homogeneous && f == dc)) continue;
      const double r = std::sqrt(lat.freq_norm2(f));
      modes.push_back({vol * a2, weight(c.x0, r), weight(c.x1, r)});
    }
  }

  double operator()(double t) const {
    if (!(t > 0.0)) throw InvalidParameter("K-functional needs t > 0");
    double sum = 0.0;
    for (const auto& [a2, w0, w1] : modes) {
      const double v0 = w0 * w0, v1 = t * t * w1 * w1;
      sum += a2 * v0 * v1 / (v0 + v1);
    }
    return std::sqrt(sum);
  }
};

}  // namespace

double k_functional_exact_hilbert(const Field& u, const Couple& c, double t) { return HilbertWeights(u, c)(t); }

KCurve k_curve(const Field& u, const Couple& c, KKind kind, const LogGrid& grid, Quadrature quad) {
  KCurve k{grid.nodes(), {}, kind};
  k.values.resize(k.t.size());
  if (kind == KKind::exact_hilbert) {
    const HilbertWeights k2(u, c);
    for (std::size_t i = 0; i < k.t.size(); ++i) k.values[i] = k2(k.t[i]);
    return k;
  }
  const DyadicSplits splits(u, c, quad);
  std::optional<HilbertWeights> k2;
  if (kind == KKind::best && is_hilbert_couple(c)) k2.emplace(u, c);
  for (std::size_t i = 0; i < k.t.size(); ++i) {
    k.values[i] = splits(k.t[i]);
    if (k2) k.values[i] = std::min(k.values[i], std::sqrt(2.0) * (*k2)(k.t[i]));
  }
  return k;
}

double interp_functional(const KCurve& k, double theta, double q) {
  check_theta(theta);
  check_exponent(q);
  const std::size_t m = k.t.size();
  if (m < 2) throw InvalidParameter("K-curve needs at least two nodes");
  if (std::isinf(q)) {
    double sup = 0.0;
    for (std::size_t i = 0; i < m; ++i) sup = std::max(sup, std::pow(k.t[i], -theta) * k.values[i]);
    return sup;
  }
  // Integrate in log t after factoring out the peak so large q stays finite.
  double peak = 0.0;
  std::vector<double> f(m);
  for (std::size_t i = 0; i < m; ++i) {
    f[i] = std::pow(k.t[i], -theta) * k.values[i];
    peak = std::max(peak, f[i]);
  }
  if (peak == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    const double h = std::log(k.t[i] / k.t[i - 1]);
    acc += 0.5 * h * (std::pow(f[i - 1] / peak, q) + std::pow(f[i] / peak, q));
  }
  acc += std::pow(f.front() / peak, q) / ((1.0 - theta) * q);
  acc += std::pow(f.back() / peak, q) / (theta * q);
  return peak * std::pow(acc, 1.0 / q);
}

double real_interp_norm(const Field& u, const Couple& c, double theta, double q, const LogGrid& grid,
                        Quadrature quad) {
  check_theta(theta);
  check_exponent(q);
  if (u.is_zero()) return 0.0;
  return interp_functional(k_curve(u, c, KKind::best, grid, quad), theta, q);
}

double holder_check(const Field& u, double s0, double s1, double p0, double p1, double theta, Quadrature quad) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidParameter("theta must lie in [0, 1]");
  check_exponent(p0);
  check_exponent(p1);
  if (u.is_zero()) throw ZeroField("Hoelder ratio of the zero field");
  const double s = (1.0 - theta) * s0 + theta * s1;
  const double inv_p = (1.0 - theta) / p0 + theta / p1;
  const double p = inv_p == 0.0 ? kInf : 1.0 / inv_p;
  const auto norm = [&](double ss, double pp) { return sobolev_norm(u, SpaceSpec{Family::Hdot, ss, pp}, quad); };
  const double den = std::pow(norm(s0, p0), 1.0 - theta) * std::pow(norm(s1, p1), theta);
  if (den == 0.0) throw ZeroField("Hoelder ratio with a vanishing endpoint norm");
  return norm(s, p) / den;
}

}  // namespace fsx
