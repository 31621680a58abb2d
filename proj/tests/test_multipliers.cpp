// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "fsx/error.hpp"
#include "fsx/multipliers.hpp"
#include "fsx/norms.hpp"
#include "test_support.hpp"

using namespace fsx;
using fsx::test::max_coeff_diff;
using fsx::test::random_field;
using fsx::test::rel_coeff_diff;

namespace {
const Lattice kLat = make_lattice(2, 32);
Field wave(int a, int b) { return Field::plane_wave(kLat, std::array<int, 2>{a, b}); }
}  // namespace

TEST_CASE("apply_symbol examples") {
  const Field u = random_field(kLat, 1, false);
  CHECK(max_coeff_diff(apply_symbol(u, radial_symbol([](double) { return 1.0; }, 1.0)), u) == 0.0);

  const Field w = wave(3, 4);
  CHECK(max_coeff_diff(apply_symbol(w, radial_symbol([](double r) { return r * r; }, 0.0)), 25.0 * w) < 1e-12);

  const Field v = apply_symbol(u, radial_symbol([](double r) { return std::exp(-r); }, 1.0));
  std::vector<int> k(2);
  double err = 0.0;
  for (std::size_t f = 0; f < u.coeffs().size(); ++f) {
    kLat.decode(f, k);
    const double r = std::hypot(static_cast<double>(k[0]), static_cast<double>(k[1]));
    err = std::max(err, std::abs(v.coeffs()[f] - std::exp(-r) * u.coeffs()[f]));
  }
  CHECK(err < 1e-14);

  const Field dc = Field::constant(kLat, 1.0);
  CHECK_THROWS_AS(apply_symbol(dc, radial_symbol([](double r) { return 1.0 / r; }, std::nullopt)),
                  HomogeneousDCViolation);
}

TEST_CASE("fractional_laplacian and bessel_potential") {
  CHECK(max_coeff_diff(fractional_laplacian(wave(1, 0), 2.0), wave(1, 0)) < 1e-15);
  CHECK(max_coeff_diff(fractional_laplacian(wave(3, 4), 1.0), 5.0 * wave(3, 4)) < 1e-14);

  const Field u = random_field(kLat, 2);
  CHECK(rel_coeff_diff(fractional_laplacian(fractional_laplacian(u, 0.5), -0.5), u) < 1e-12);
  CHECK_THROWS_AS(fractional_laplacian(random_field(kLat, 2, false), -1.0), HomogeneousDCViolation);

  CHECK(max_coeff_diff(bessel_potential(u, 0.0), u) < 1e-15);
  const Field c = Field::constant(kLat, 2.0);
  CHECK(max_coeff_diff(bessel_potential(c, 3.7), c) == 0.0);
  CHECK(max_coeff_diff(bessel_potential(wave(1, 1), 2.0), 3.0 * wave(1, 1)) < 1e-14);
}

TEST_CASE("derivatives and horizontal operators") {
  const std::array<int, 2> dx1{1, 0};
  CHECK(max_coeff_diff(derivative(wave(1, 0), dx1), Complex{0.0, 1.0} * wave(1, 0)) < 1e-15);
  CHECK(max_coeff_diff(horizontal_laplacian(wave(2, 7)), -4.0 * wave(2, 7)) < 1e-14);

  const Field u = random_field(kLat, 3, false);
  const std::array<int, 2> a21{2, 1};
  const Field d = derivative(u, a21);
  std::vector<int> k(2);
  double err = 0.0;
  for (std::size_t f = 0; f < u.coeffs().size(); ++f) {
    kLat.decode(f, k);
    const Complex sym = Complex{0.0, double(k[0])} * Complex{0.0, double(k[0])} * Complex{0.0, double(k[1])};
    err = std::max(err, std::abs(d.coeffs()[f] - sym * u.coeffs()[f]));
  }
  CHECK(err < 1e-14 * 32 * 32 * 32);

  // (-Delta')^{s/2} is singular on the whole vertical axis xi' = 0.
  CHECK_THROWS_AS(horizontal_fractional_laplacian(wave(0, 3), 0.5), HomogeneousDCViolation);
  CHECK(max_coeff_diff(horizontal_fractional_laplacian(wave(4, 3), 1.0), 4.0 * wave(4, 3)) < 1e-14);
}

TEST_CASE("resolvent_wholespace examples") {
  CHECK(max_coeff_diff(resolvent_wholespace(wave(1, 0), 1.0), 0.5 * wave(1, 0)) < 1e-15);
  const Complex i{0.0, 1.0};
  CHECK(max_coeff_diff(resolvent_wholespace(wave(3, 4), i), wave(3, 4) * (1.0 / (25.0 + i))) < 1e-15);

  const Complex lambda = std::polar(10.0, 3.0 * std::numbers::pi / 8.0);
  for (int seed = 0; seed < 5; ++seed) {
    const Field f = random_field(kLat, 100 + seed, false);
    const Field u = resolvent_wholespace(f, lambda);
    const Field res = lambda * u - laplacian(u) - f;
    CHECK(lp_norm(res, 2.0) <= 1e-12 * lp_norm(f, 2.0));
    // Applying (lambda - Delta) first and then the resolvent is the identity.
    CHECK(rel_coeff_diff(resolvent_wholespace(lambda * f - laplacian(f), lambda), f) < 1e-12);
  }

  CHECK_THROWS_AS(resolvent_wholespace(wave(1, 0), -2.0), SpectrumHit);
  CHECK_THROWS_AS(resolvent_wholespace(wave(1, 0), -0.5), SpectrumHit);
  CHECK_THROWS_AS(resolvent_wholespace(Field::constant(kLat, 1.0), 0.0), HomogeneousDCViolation);
  CHECK(max_coeff_diff(resolvent_wholespace(wave(2, 0), 0.0), 0.25 * wave(2, 0)) < 1e-15);
}

TEST_CASE("multiplier algebra: semigroup law and commutativity") {
  for (int seed = 0; seed < 10; ++seed) {
    const Field u = random_field(kLat, 200 + seed);
    const double s = -1.0 + 0.3 * seed, t = 0.7 - 0.2 * seed;
    CHECK(rel_coeff_diff(fractional_laplacian(fractional_laplacian(u, s), t), fractional_laplacian(u, s + t)) <
          1e-12);
    const std::array<int, 2> a{1, 2};
    const Field ab = derivative(bessel_potential(u, s), a);
    const Field ba = bessel_potential(derivative(u, a), s);
    CHECK(rel_coeff_diff(ab, ba) < 1e-13);
    const Field rh = resolvent_wholespace(horizontal_laplacian(u), Complex{1.0, 2.0});
    const Field hr = horizontal_laplacian(resolvent_wholespace(u, Complex{1.0, 2.0}));
    CHECK(rel_coeff_diff(rh, hr) < 1e-13);
  }
}
