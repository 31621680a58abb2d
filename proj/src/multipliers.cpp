// SPDX-License-Identifier: Apache-2.0
#include "fsx/multipliers.hpp"

#include <cmath>
#include <vector>

#include "fsx/error.hpp"

namespace fsx {

namespace {

bool on_vertical_axis(std::span<const double> xi) {
  for (std::size_t i = 0; i + 1 < xi.size(); ++i)
    if (xi[i] != 0.0) return false;
  return true;
}

}  // namespace

Symbol radial_symbol(std::function<double(double)> g, std::optional<Complex> at_zero) {
  return Symbol{[g = std::move(g)](std::span<const double> xi) {
                  double r2 = 0.0;
                  for (double v : xi) r2 += v * v;
                  return Complex{g(std::sqrt(r2))};
                },
                at_zero};
}

Field apply_symbol(const Field& u, const Symbol& m) {
  const Lattice& lat = u.lattice();
  const auto in = u.coeffs();
  const double tol = kDcTolerance * u.max_abs_coeff();
  Field out(lat);
  auto dst = out.coeffs();
  std::vector<double> xi(lat.n);
  const std::size_t zero = in.size() / 2;
  for (std::size_t flat = 0; flat < in.size(); ++flat) {
    if (in[flat] == Complex{}) continue;
    lat.frequency(flat, xi);
    const bool singular = flat == zero || (m.undefined_on_vertical_axis && on_vertical_axis(xi));
    if (flat == zero && m.at_zero && !m.undefined_on_vertical_axis) {
      dst[flat] = *m.at_zero * in[flat];
      continue;
    }
    if (singular) {
      if (std::abs(in[flat]) > tol)
        throw HomogeneousDCViolation("symbol undefined on an occupied singular mode");
      continue;
    }
    dst[flat] = m.fn(xi) * in[flat];
  }
  return out;
}

Field fractional_laplacian(const Field& u, double s) {
  if (s == 0.0) return u;
  return apply_symbol(u, radial_symbol([s](double r) { return std::pow(r, s); }, std::nullopt));
}

Field bessel_potential(const Field& u, double s) {
  return apply_symbol(u, radial_symbol([s](double r) { return std::pow(1.0 + r * r, 0.5 * s); }, 1.0));
}

Field derivative(const Field& u, std::span<const int> alpha) {
  if (static_cast<int>(alpha.size()) != u.lattice().n) throw InvalidParameter("multi-index dimension mismatch");
  std::vector<int> a(alpha.begin(), alpha.end());
  int order = 0;
  for (int ai : a) {
    if (ai < 0) throw InvalidParameter("negative multi-index entry");
    order += ai;
  }
  Symbol sym{[a](std::span<const double> xi) {
               Complex r{1.0};
               for (std::size_t i = 0; i < a.size(); ++i)
                 for (int p = 0; p < a[i]; ++p) r *= Complex{0.0, xi[i]};
               return r;
             },
             order == 0 ? Complex{1.0} : Complex{0.0}};
  return apply_symbol(u, sym);
}

Field horizontal_laplacian(const Field& u) {
  Symbol sym{[](std::span<const double> xi) {
               double r2 = 0.0;
               for (std::size_t i = 0; i + 1 < xi.size(); ++i) r2 += xi[i] * xi[i];
               return Complex{-r2};
             },
             Complex{0.0}};
  return apply_symbol(u, sym);
}

Field horizontal_fractional_laplacian(const Field& u, double s) {
  Symbol sym{[s](std::span<const double> xi) {
               double r2 = 0.0;
               for (std::size_t i = 0; i + 1 < xi.size(); ++i) r2 += xi[i] * xi[i];
               return Complex{std::pow(r2, 0.5 * s)};
             },
             std::nullopt, true};
  return apply_symbol(u, sym);
}

Field laplacian(const Field& u) {
  return apply_symbol(u, radial_symbol([](double r) { return -r * r; }, 0.0));
}

Field resolvent_wholespace(const Field& f, Complex lambda) {
  if (lambda.imag() == 0.0 && lambda.real() < 0.0)
    throw SpectrumHit("lambda on the negative real axis lies in the spectrum of -Delta");
  const Lattice& lat = f.lattice();
  if (lambda == Complex{} && !f.is_homogeneous_admissible())
    throw HomogeneousDCViolation("lambda = 0 requires a zero-mean right-hand side");
  const auto in = f.coeffs();
  Field out(lat);
  auto dst = out.coeffs();
  for (std::size_t flat = 0; flat < in.size(); ++flat) {
    if (in[flat] == Complex{}) continue;
    const Complex denom = lambda + lat.freq_norm2(flat);
    if (denom == Complex{}) {
      if (lambda == Complex{}) continue;  // zero-mean DC residue below tolerance
      throw SpectrumHit("lambda + |xi|^2 vanishes on an occupied mode");
    }
    dst[flat] = in[flat] / denom;
  }
  return out;
}

}  // namespace fsx
