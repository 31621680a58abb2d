// SPDX-License-Identifier: Apache-2.0
// Shared helpers for the unit tests: seeded random fields and direct-summation
// oracles that do not go through the library's FFT paths.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fsx/lattice.hpp"

namespace fsx::test {

/// Random field with complex-normal amplitudes damped by (1 + |k|)^{-decay}.
/// `zero_dc` clears the mean; `nmodes` > 0 keeps only that many random modes.
inline Field random_field(const Lattice& lat, std::uint64_t seed, bool zero_dc = true, double decay = 2.0,
                          int nmodes = 0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Field u(lat);
  std::vector<int> k(lat.n);
  auto coeffs = u.coeffs();
  if (nmodes > 0) {
    std::uniform_int_distribution<int> pick(-lat.K, lat.K);
    for (int m = 0; m < nmodes; ++m) {
      for (auto& ki : k) ki = pick(rng);
      const double r = std::sqrt(static_cast<double>(lat.freq_norm2(lat.encode(k)))) / lat.freq_scale();
      u.set_coeff(k, Complex{normal(rng), normal(rng)} * std::pow(1.0 + r, -decay));
    }
  } else {
    for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
      const double r = std::sqrt(lat.freq_norm2(flat)) / lat.freq_scale();
      coeffs[flat] = Complex{normal(rng), normal(rng)} * std::pow(1.0 + r, -decay);
    }
  }
  if (zero_dc) coeffs[coeffs.size() / 2] = 0.0;
  return u;
}

/// sum_k c_k exp(i (2 pi / L) k . x) with one complex exponential per mode.
inline Complex direct_eval(const Field& u, const std::vector<double>& x) {
  const Lattice& lat = u.lattice();
  std::vector<int> k(lat.n);
  Complex sum{};
  const auto c = u.coeffs();
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    if (c[flat] == Complex{}) continue;
    lat.decode(flat, k);
    double phase = 0.0;
    for (int i = 0; i < lat.n; ++i) phase += lat.freq_scale() * k[i] * x[i];
    sum += c[flat] * std::exp(Complex{0.0, phase});
  }
  return sum;
}

inline double max_coeff_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  return m;
}

inline double rel_coeff_diff(const Field& a, const Field& b) {
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  return scale == 0.0 ? 0.0 : max_coeff_diff(a, b) / scale;
}

/// Plancherel oracle: (L^n sum_k w(k)^2 |c_k|^2)^{1/2} with a per-mode weight.
template <class Weight>
double plancherel(const Field& u, Weight&& w) {
  const Lattice& lat = u.lattice();
  double s = 0.0;
  for (std::size_t flat = 0; flat < u.coeffs().size(); ++flat) {
    const double a = std::abs(u.coeffs()[flat]);
    if (a == 0.0) continue;
    const double wk = w(std::sqrt(lat.freq_norm2(flat)));
    s += wk * wk * a * a;
  }
  return std::sqrt(std::pow(lat.L, lat.n) * s);
}

inline std::vector<double> random_point(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

}  // namespace fsx::test
