// SPDX-License-Identifier: Apache-2.0
#include "fsx/trace_poisson.hpp"

#include <cmath>
#include <vector>

#include "fsx/error.hpp"
#include "fsx/multipliers.hpp"
#include "fsx/norms.hpp"

namespace fsx {

namespace {

Lattice boundary_lattice(const Lattice& lat) {
  if (lat.n < 2) throw DimensionTooSmall("trace needs n >= 2");
  return make_lattice(lat.n - 1, lat.K, lat.L);
}

}  // namespace

PoissonField::PoissonField(Field boundary) : boundary_(std::move(boundary)) {
  if (!boundary_.is_homogeneous_admissible())
    throw HomogeneousDCViolation("harmonic extension needs mean-free boundary data");
  boundary_.coeffs()[boundary_.lattice().mode_count() / 2] = 0.0;
}

Complex PoissonField::evaluate(std::span<const double> x, std::span<const int> alpha) const {
  const Lattice& b = boundary_.lattice();
  if (static_cast<int>(x.size()) != b.n + 1) throw InvalidParameter("point dimension mismatch");
  if (!alpha.empty() && static_cast<int>(alpha.size()) != b.n + 1) throw InvalidParameter("multi-index dimension mismatch");
  std::vector<int> k(b.n);
  std::vector<double> xi(b.n);
  const double xn = x[b.n];
  Complex sum{};
  for (std::size_t f = 0; f < boundary_.coeffs().size(); ++f) {
    const Complex c = boundary_.coeffs()[f];
    if (c == Complex{}) continue;
    b.frequency(f, xi);
    double phase = 0.0, w2 = 0.0;
    for (int i = 0; i < b.n; ++i) {
      phase += xi[i] * x[i];
      w2 += xi[i] * xi[i];
    }
    const double w = std::sqrt(w2);
    Complex factor = std::exp(Complex{-xn * w, phase});
    if (!alpha.empty()) {
      for (int i = 0; i < b.n; ++i)
        for (int a = 0; a < alpha[i]; ++a) factor *= Complex{0.0, xi[i]};
      factor *= std::pow(-w, alpha[b.n]);
    }
    sum += c * factor;
  }
  return sum;
}

Field PoissonField::slice(double depth) const {
  const Lattice& b = boundary_.lattice();
  Field out(b);
  for (std::size_t f = 0; f < out.coeffs().size(); ++f)
    out.coeffs()[f] = boundary_.coeffs()[f] * std::exp(-depth * std::sqrt(b.freq_norm2(f)));
  return out;
}

Field trace(const Field& u) {
  const Lattice& lat = u.lattice();
  const Lattice b = boundary_lattice(lat);
  Field out(b);
  const std::size_t side = lat.side();
  // Row-major with the vertical axis fastest: each boundary mode owns a run.
  for (std::size_t f = 0; f < b.mode_count(); ++f) {
    Complex s{};
    for (std::size_t kn = 0; kn < side; ++kn) s += u.coeffs()[f * side + kn];
    out.coeffs()[f] = s;
  }
  return out;
}

Field trace(const PoissonField& u) { return u.boundary(); }

Field normal_trace(const Field& u) {
  std::vector<int> a(u.lattice().n, 0);
  a.back() = 1;
  return trace(derivative(u, a));
}

PoissonField poisson_extend(const Field& g) { return PoissonField(g); }

MaterializedPoisson materialize_poisson(const PoissonField& pf, const Lattice& lat, int order) {
  const Lattice& b = pf.boundary().lattice();
  if (lat.n != b.n + 1) throw InvalidParameter("target lattice must have one more dimension than the boundary");
  if (lat.L != b.L) throw InvalidParameter("boundary and target periods differ");
  const Lattice target_b = boundary_lattice(lat);
  const PoissonField flow(b.K == target_b.K ? pf.boundary() : pf.boundary().embed(target_b));
  const ReflectionCoeffs rc = reflection_coefficients(order);
  const int M = default_grid_size(lat.K);
  const int half = M / 2, band = M / 16;
  const double h = lat.L / M;
  const std::size_t cols = static_cast<std::size_t>(std::pow(M, lat.n - 1));
  auto row = [&](double xn) { return sample_grid(flow.slice(xn), M).values; };

  SampleGrid grid{lat, M, std::vector<Complex>(cols * M)};
  double peak = 0.0, leakage = 0.0;
  for (int iv = 0; iv <= half; ++iv) {
    const std::vector<Complex> r = row(iv * h);
    for (std::size_t c = 0; c < cols; ++c) {
      grid.values[c * M + iv] = r[c];
      peak = std::max(peak, std::abs(r[c]));
      if (iv >= half - band) leakage = std::max(leakage, std::abs(r[c]));
    }
  }
  // Lower strip: windowed reflection sum_j alpha_j u(x', y/(j+1)) at x_n = -y.
  for (int iv = half; iv < M; ++iv) {
    const double y = (M - iv) * h;
    const double w = lower_window(-y, lat.L);
    std::vector<Complex> acc(cols);
    if (w != 0.0)
      for (std::size_t j = 0; j < rc.alpha.size(); ++j) {
        const std::vector<Complex> r = row(y / static_cast<double>(j + 1));
        for (std::size_t c = 0; c < cols; ++c) acc[c] += rc.alpha[j] * r[c];
      }
    for (std::size_t c = 0; c < cols; ++c) {
      Complex& v = grid.values[c * M + iv];
      v = iv == half ? 0.5 * (v + w * acc[c]) : w * acc[c];
    }
  }
  Projection p = project_bandlimited(grid, lat);
  return {HalfField{std::move(p.field), leakage, peak}, p.residual};
}

double poisson_besov_norm(const Field& u, double s, double alpha, double p, double q, const LogGrid& grid,
                          Quadrature quad) {
  if (!(s > 0.0)) throw InvalidParameter("Poisson characterization needs s > 0");
  if (!(alpha >= 0.0)) throw InvalidParameter("Poisson characterization needs alpha >= 0");
  check_exponent(p);
  check_exponent(q);
  if (!u.is_homogeneous_admissible()) throw HomogeneousDCViolation("Poisson characterization needs a mean-free field");
  if (u.is_zero()) return 0.0;
  const std::vector<double> t = grid.nodes();
  std::vector<double> f(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double ti = t[i];
    const Symbol sym = radial_symbol([ti, alpha](double r) { return std::pow(r, alpha) * std::exp(-ti * r); }, Complex{});
    f[i] = std::pow(ti, s) * lp_norm(apply_symbol(u, sym), p, Domain::whole, quad);
  }
  if (std::isinf(q)) return *std::max_element(f.begin(), f.end());
  const double peak = *std::max_element(f.begin(), f.end());
  if (peak == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i)
    acc += 0.5 * std::log(t[i] / t[i - 1]) * (std::pow(f[i - 1] / peak, q) + std::pow(f[i] / peak, q));
  // The tail model continued on the same log grid: a geometric series, which
  // avoids the endpoint error of a cut trapezoid rule.
  const double h = std::log(t[1] / t[0]);
  acc += h * std::pow(f.front() / peak, q) * (1.0 / (-std::expm1(-s * q * h)) - 0.5);
  return peak * std::pow(acc, 1.0 / q);
}

}  // namespace fsx
