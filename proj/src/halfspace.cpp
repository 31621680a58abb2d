// SPDX-License-Identifier: Apache-2.0
#include "fsx/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fsx/error.hpp"
#include "fsx/field_io.hpp"
#include "fsx/littlewood_paley.hpp"

namespace fsx {

namespace {

int grid_size(const Lattice& lat, int M) { return M > 0 ? M : default_grid_size(lat.K); }

double node(int j) { return -1.0 / (j + 1); }

// Reflection extensions of one field on the M-grid. Each column of M vertical
// samples is contiguous.
class Reflector {
 public:
  Reflector(const Field& u, int M) : lat_(u.lattice()), M_(M), base_(sample_grid(u, M)), ce_(u, M) {}

  const SampleGrid& base() const { return base_; }

  SampleGrid extend(const std::vector<double>& alpha, Side side, bool windowed) const {
    SampleGrid g = base_;
    const std::size_t cols = ce_.columns();
    const double h = lat_.L / M_;
    const int half = M_ / 2;
    // Rows of the reflected half: x_n = (iv - M) h below, iv h above.
    const int first = side == Side::upper ? half + 1 : 1;
    const int last = side == Side::upper ? M_ : half;
    for (int iv = first; iv < last; ++iv) {
      const double xn = side == Side::upper ? (iv - M_) * h : iv * h;
      const double w = windowed ? lower_window(xn, lat_.L) : 1.0;
      const std::vector<Complex> r = reflected_row(alpha, -xn);
      for (std::size_t c = 0; c < cols; ++c) g.values[c * M_ + iv] = w * r[c];
    }
    // The seam sees x_n = -L/2 from the reflected side.
    const double seam_xn = side == Side::upper ? -0.5 * lat_.L : 0.5 * lat_.L;
    const double w = windowed ? lower_window(seam_xn, lat_.L) : 1.0;
    const std::vector<Complex> seam = reflected_row(alpha, -seam_xn);
    for (std::size_t c = 0; c < cols; ++c) g.values[c * M_ + half] = 0.5 * (g.values[c * M_ + half] + w * seam[c]);
    return g;
  }

  /// Applies lower_window to the reflected rows of an upper extension.
  SampleGrid windowed(const SampleGrid& plain) const {
    SampleGrid g = plain;
    const std::size_t cols = ce_.columns();
    const double h = lat_.L / M_;
    const int half = M_ / 2;
    const double ws = lower_window(-0.5 * lat_.L, lat_.L);
    for (std::size_t c = 0; c < cols; ++c) {
      Complex* col = g.values.data() + c * M_;
      for (int iv = half + 1; iv < M_; ++iv) col[iv] *= lower_window((iv - M_) * h, lat_.L);
      const Complex b = base_.values[c * M_ + half];
      col[half] = 0.5 * (b + ws * (2.0 * col[half] - b));
    }
    return g;
  }

 private:
  // sum_j alpha_j u(x', y/(j+1)) for every column.
  std::vector<Complex> reflected_row(const std::vector<double>& alpha, double y) const {
    std::vector<Complex> acc(ce_.columns());
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      const std::vector<Complex> r = ce_.row(y / static_cast<double>(j + 1));
      for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += alpha[j] * r[c];
    }
    return acc;
  }

  Lattice lat_;
  int M_;
  SampleGrid base_;
  ColumnEvaluator ce_;
};

SampleGrid reflected_samples(const Field& u, const std::vector<double>& alpha, Side side, int M, bool windowed) {
  return Reflector(u, M).extend(alpha, side, windowed);
}

// Odd reflection takes the value 0 on x_n = 0 and on the seam.
SampleGrid parity_samples(const Field& u, Parity parity, int M) {
  SampleGrid g = sample_grid(u, M);
  const std::size_t cols = g.values.size() / M;
  const double sign = parity == Parity::odd ? -1.0 : 1.0;
  const int half = M / 2;
  for (std::size_t c = 0; c < cols; ++c) {
    Complex* col = g.values.data() + c * M;
    for (int iv = half + 1; iv < M; ++iv) col[iv] = sign * col[M - iv];
    if (parity == Parity::odd) col[0] = col[half] = 0.0;
  }
  return g;
}

void check_leakage(const HalfField& u, const ExtendOptions& opt) {
  if (opt.max_leakage && u.leakage > *opt.max_leakage * u.peak)
    throw LeakageTooLarge("far-face leakage " + std::to_string(u.leakage) + " exceeds the allowed fraction of the peak");
}

}  // namespace

double ReflectionCoeffs::moment_residual() const {
  double worst = 0.0;
  for (int kappa = 0; kappa <= m; ++kappa) {
    double s = 0.0;
    for (int j = 0; j <= m; ++j) s += alpha[j] * std::pow(node(j), kappa);
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

ReflectionCoeffs ReflectionCoeffs::shifted(int ell) const {
  if (ell < 0) throw InvalidParameter("shift order must be >= 0");
  ReflectionCoeffs out = *this;
  for (int j = 0; j <= m; ++j) out.alpha[j] *= std::pow(node(j), ell);
  return out;
}

ReflectionCoeffs reflection_coefficients(int m) {
  if (m < 0) throw InvalidParameter("reflection order must be >= 0");
  if (m > 8) throw IllConditioned("reflection order above 8 makes the moment system ill-conditioned");
  ReflectionCoeffs c{m, std::vector<double>(m + 1)};
  for (int j = 0; j <= m; ++j) {
    double l = 1.0;
    for (int i = 0; i <= m; ++i)
      if (i != j) l *= (1.0 - node(i)) / (node(j) - node(i));
    c.alpha[j] = l;
  }
  return c;
}

HalfField make_half_field(const Field& u, int M) {
  const Lattice& lat = u.lattice();
  M = grid_size(lat, M);
  const SampleGrid g = sample_grid(u, M);
  HalfField out{u, 0.0, 0.0};
  const int half = M / 2, band = M / 16;
  for (std::size_t f = 0; f < g.values.size(); ++f) {
    const int iv = g.vertical_index(f);
    if (iv > half) continue;
    const double a = std::abs(g.values[f]);
    out.peak = std::max(out.peak, a);
    if (iv >= half - band) out.leakage = std::max(out.leakage, a);
  }
  return out;
}

nlohmann::json half_field_to_json(const HalfField& u) {
  nlohmann::json j = field_to_json(u.field);
  j["halfspace"] = true;
  j["leakage"] = u.leakage;
  return j;
}

HalfField half_field_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.value("halfspace", false)) throw InvalidParameter("field JSON lacks \"halfspace\": true");
  // Leakage is recomputed from the modes; the stored value is informational.
  return make_half_field(field_from_json(j));
}

Projection extend_reflect(const HalfField& u, const ReflectionCoeffs& coeffs, Side side, ExtendOptions opt) {
  check_leakage(u, opt);
  const Lattice& lat = u.field.lattice();
  return project_bandlimited(reflected_samples(u.field, coeffs.alpha, side, grid_size(lat, opt.M), false), lat);
}

Projection extend_reflect(const HalfField& u, int m, Side side, ExtendOptions opt) {
  return extend_reflect(u, reflection_coefficients(m), side, opt);
}

Field mirror_vertical(const Field& u) {
  const Lattice& lat = u.lattice();
  Field out(lat);
  std::vector<int> k(lat.n);
  for (std::size_t f = 0; f < u.coeffs().size(); ++f) {
    if (u.coeffs()[f] == Complex{}) continue;
    lat.decode(f, k);
    k.back() = -k.back();
    out.coeffs()[lat.encode(k)] = u.coeffs()[f];
  }
  return out;
}

double restriction_mismatch(const Field& extension, const Field& data, int M) {
  const Lattice& lat = data.lattice();
  M = grid_size(lat, M);
  const SampleGrid e = sample_grid(extension, M), d = sample_grid(data, M);
  double diff = 0.0, total = 0.0;
  for (std::size_t f = 0; f < e.values.size(); ++f) {
    total += std::norm(e.values[f]);
    if (e.vertical_index(f) < M / 2) diff += std::norm(e.values[f] - d.values[f]);
  }
  return total == 0.0 ? std::sqrt(diff) : std::sqrt(diff / total);
}

PointFunction reflect_pointwise(PointFunction data, const Lattice& lat, const ReflectionCoeffs& coeffs, Side side) {
  return [data = std::move(data), L = lat.L, alpha = coeffs.alpha, side](std::span<const double> x) -> Complex {
    std::vector<double> y(x.begin(), x.end());
    double& t = y.back();
    t -= L * std::round(t / L);
    const bool own = side == Side::upper ? t >= 0.0 : t <= 0.0;
    auto reflected = [&](double tn) {
      Complex acc{};
      for (std::size_t j = 0; j < alpha.size(); ++j) {
        y.back() = -tn / static_cast<double>(j + 1);
        acc += alpha[j] * data(y);
      }
      y.back() = tn;
      return acc;
    };
    if (std::abs(std::abs(t) - 0.5 * L) <= 1e-15 * L) {
      const double tn = side == Side::upper ? -0.5 * L : 0.5 * L;
      y.back() = -tn;
      const Complex direct = data(y);
      return 0.5 * (direct + reflected(tn));
    }
    return own ? data(y) : reflected(t);
  };
}

Projection project_zero(const Field& u, int m, ExtendOptions opt) {
  const Lattice& lat = u.lattice();
  const int M = grid_size(lat, opt.M);
  // The lower-strip data has its far face near x_n = -L/2.
  if (opt.max_leakage) check_leakage(make_half_field(mirror_vertical(u), M), opt);
  const Reflector refl(u, M);
  SampleGrid g = refl.base();
  const SampleGrid e = refl.extend(reflection_coefficients(m).alpha, Side::lower, false);
  for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] -= e.values[i];
  return project_bandlimited(g, lat);
}

PointFunction project_zero_pointwise(PointFunction u, const Lattice& lat, int m) {
  PointFunction ext = reflect_pointwise(u, lat, reflection_coefficients(m), Side::lower);
  return [u = std::move(u), ext = std::move(ext)](std::span<const double> x) { return u(x) - ext(x); };
}

Projection reflect_parity(const HalfField& u, Parity parity, int M) {
  const Lattice& lat = u.field.lattice();
  return project_bandlimited(parity_samples(u.field, parity, grid_size(lat, M)), lat);
}

Projection indicator_multiply(const Field& u, int factor) {
  if (factor < 1) throw InvalidParameter("bandlimit factor must be >= 1");
  const Lattice& lat = u.lattice();
  const Lattice big = make_lattice(lat.n, factor * lat.K, lat.L);
  const int M = default_grid_size(big.K);
  SampleGrid g = sample_grid(u.embed(big), M);
  for (std::size_t f = 0; f < g.values.size(); ++f)
    if (g.vertical_index(f) >= M / 2) g.values[f] = 0.0;
  return project_bandlimited(g, big);
}

double lower_window(double x_n, double L) {
  const double r = std::abs(x_n) / (0.5 * L) * (4.0 / 3.0);
  return lp_profile(r);
}

RestrictionNorm restriction_norm(const HalfField& u, const SpaceSpec& spec, Quadrature quad) {
  if (spec.domain == Domain::whole) throw InvalidParameter("restriction_norm expects a half-space spec");
  SpaceSpec whole = spec;
  whole.domain = Domain::whole;
  RestrictionNorm out;
  if (spec.family == Family::Lp) out.lower_bound = lp_norm(u.field, spec.p, Domain::halfspace, quad);
  if (u.field.is_zero()) {
    out.witness = "zero";
    return out;
  }

  const Lattice& lat = u.field.lattice();
  const int M = grid_size(lat, quad.M);
  // Lp candidates are measured on their raw samples with the same rule as the
  // strip value; the other families need the projected field.
  const bool raw = spec.family == Family::Lp;
  auto consider = [&](const std::string& id, const SampleGrid& g) {
    try {
      const double v = raw ? lp_norm_samples(g, spec.p) : space_norm(project_bandlimited(g, lat).field, whole, quad);
      out.candidates.emplace_back(id, v);
    } catch (const HomogeneousDCViolation&) {
      // A mean is not a valid element of the homogeneous space.
    }
  };
  const Reflector refl(u.field, M);
  for (int m = 0; m <= 4; ++m) {
    const auto alpha = reflection_coefficients(m).alpha;
    const SampleGrid plain = refl.extend(alpha, Side::upper, false);
    consider("E" + std::to_string(m), plain);
    consider("E" + std::to_string(m) + "w", refl.windowed(plain));
  }
  consider("E_D", parity_samples(u.field, Parity::odd, M));
  consider("E_N", parity_samples(u.field, Parity::even, M));
  // Zero extension is bounded only for -1 + 1/p < s < 1/p.
  const double inv_p = std::isinf(spec.p) ? 0.0 : 1.0 / spec.p;
  if (raw) {
    SampleGrid g = refl.base();
    for (std::size_t f = 0; f < g.values.size(); ++f)
      if (g.vertical_index(f) >= M / 2) g.values[f] = 0.0;
    consider("zero", g);
  } else if (spec.s > -1.0 + inv_p && spec.s < inv_p) {
    try {
      out.candidates.emplace_back("zero", space_norm(indicator_multiply(u.field).field, whole, quad));
    } catch (const HomogeneousDCViolation&) {
    }
  }

  if (out.candidates.empty()) throw HomogeneousDCViolation("no mean-free extension in the witness set");
  const auto best = std::min_element(out.candidates.begin(), out.candidates.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  out.value = best->second;
  out.witness = best->first;
  return out;
}

}  // namespace fsx
