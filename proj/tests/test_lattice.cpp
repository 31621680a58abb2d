// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "fsx/error.hpp"
#include "fsx/field_io.hpp"
#include "fsx/lattice.hpp"
#include "test_support.hpp"

using namespace fsx;
using fsx::test::direct_eval;
using fsx::test::random_field;

constexpr double kPi = std::numbers::pi;

TEST_CASE("make_lattice shapes and frequency map") {
  const Lattice a = make_lattice(2, 32, kTwoPi);
  CHECK(a.mode_count() == 65u * 65u);
  CHECK(a.freq_scale() == doctest::Approx(1.0));

  const Lattice b = make_lattice(1, 1, kTwoPi);
  CHECK(b.mode_count() == 3u);
  std::array<int, 1> k{};
  b.decode(0, k);
  CHECK(k[0] == -1);
  b.decode(2, k);
  CHECK(k[0] == 1);

  const Lattice c = make_lattice(3, 8, 4 * kPi);
  CHECK(c.freq_scale() == doctest::Approx(0.5));

  CHECK_THROWS_AS(make_lattice(0, 4), InvalidParameter);
  CHECK_THROWS_AS(make_lattice(2, 0), InvalidParameter);
  CHECK_THROWS_AS(make_lattice(2, 4, -1.0), InvalidParameter);
  CHECK(default_grid_size(32) == 256);
  CHECK(default_grid_size(16) == 128);
}

TEST_CASE("evaluate matches closed forms and the direct oracle") {
  const Lattice lat = make_lattice(2, 32);
  const std::array<int, 2> k10{1, 0};
  const Field e = Field::plane_wave(lat, k10);
  const std::array<double, 2> x{kPi, 0.0};
  const Complex v = evaluate(e, x);
  CHECK(v.real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(v.imag()) < 1e-15);

  CHECK(evaluate(Field(lat), x) == Complex{});

  const Field u = random_field(lat, 11, false, 0.0, 10);
  const std::vector<double> p{0.3, 1.1};
  CHECK(std::abs(evaluate(u, p) - direct_eval(u, p)) < 1e-14 * u.max_abs_coeff() * 10);

  // Periodicity in every coordinate.
  const std::vector<double> shifted{0.3 + kTwoPi, 1.1 - kTwoPi};
  CHECK(std::abs(evaluate(u, shifted) - evaluate(u, p)) < 1e-12);
}

TEST_CASE("evaluate is linear") {
  const Lattice lat = make_lattice(2, 8);
  const Field u = random_field(lat, 1, false);
  const Field w = random_field(lat, 2, false);
  const Complex a{0.7, -1.3}, b{-2.0, 0.4};
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto x = fsx::test::random_point(rng, 2, -10.0, 10.0);
    const Complex lhs = evaluate(a * u + b * w, x);
    const Complex rhs = a * evaluate(u, x) + b * evaluate(w, x);
    CHECK(std::abs(lhs - rhs) < 1e-13);
  }
}

TEST_CASE("sample_grid agrees with pointwise evaluation") {
  const Lattice small = make_lattice(2, 3);
  const SampleGrid c = sample_grid(Field::constant(small, 3.0), 8);
  for (auto v : c.values) CHECK(std::abs(v - Complex{3.0}) < 1e-14);

  const Lattice lat = make_lattice(2, 32);
  const std::array<int, 2> k11{1, 1};
  const SampleGrid g = sample_grid(Field::plane_wave(lat, k11), 128);
  for (auto v : g.values) CHECK(std::abs(std::abs(v) - 1.0) < 1e-13);

  const Lattice mid = make_lattice(2, 6);
  const Field u = random_field(mid, 3, false, 0.0);
  const int M = 4 * (2 * mid.K + 1);
  const SampleGrid s = sample_grid(u, M);
  double peak = 0.0, err = 0.0;
  std::vector<double> x(2);
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    s.point(i, x);
    const Complex ref = direct_eval(u, x);
    peak = std::max(peak, std::abs(ref));
    err = std::max(err, std::abs(ref - s.values[i]));
  }
  CHECK(err <= 1e-12 * peak);

  CHECK_THROWS_AS(sample_grid(u, 2 * mid.K + 1), AliasingRisk);
}

TEST_CASE("project_bandlimited round trip and residual") {
  const Lattice lat = make_lattice(2, 32);
  const Field u = random_field(lat, 21, false);
  const Projection back = project_bandlimited(sample_grid(u, 256), lat);
  CHECK(fsx::test::rel_coeff_diff(back.field, u) < 1e-12);
  CHECK(back.residual <= 1e-12);

  SampleGrid zero{lat, 256, std::vector<Complex>(256 * 256)};
  const Projection z = project_bandlimited(zero, lat);
  CHECK(z.field.is_zero());
  CHECK(z.residual == 0.0);

  CHECK_THROWS_AS(project_bandlimited(zero, make_lattice(2, 200)), AliasingRisk);
}

TEST_CASE("project_bandlimited residual of |sin x| matches its Fourier series") {
  const Lattice lat = make_lattice(1, 16);
  const int M = 256;
  const SampleGrid s = sample_function(lat, M, [](std::span<const double> x) { return Complex{std::abs(std::sin(x[0]))}; });
  const Projection pr = project_bandlimited(s, lat);

  // |sin x| = 2/pi - (4/pi) sum_m cos(2 m x)/(4m^2 - 1): c_0 = 2/pi,
  // c_{+-2m} = -2/(pi (4m^2 - 1)). The M-point DFT folds c_{k + rM} onto k.
  auto c = [](long k) {
    if (k % 2 != 0) return 0.0;
    const double m = static_cast<double>(k / 2);
    return -2.0 / (kPi * (4.0 * m * m - 1.0));
  };
  double total = 0.0, discarded = 0.0;
  for (int k = -M / 2; k < M / 2; ++k) {
    double d = 0.0;
    for (long r = -20000; r <= 20000; ++r) d += c(k + r * M);
    total += d * d;
    if (std::abs(k) > lat.K) discarded += d * d;
  }
  const double oracle = std::sqrt(discarded / total);
  CHECK(pr.residual == doctest::Approx(oracle).epsilon(1e-6));

  // Unfolded series tail for reference: aliasing moves it by a few percent.
  double tail = 0.0;
  for (long m = 9; m < 200000; ++m) tail += 2.0 * std::pow(c(2 * m), 2);
  CHECK(pr.residual == doctest::Approx(std::sqrt(tail / 0.5)).epsilon(0.05));
}

TEST_CASE("dilate maps modes and composes") {
  const Lattice lat = make_lattice(2, 32);
  const Field u = random_field(lat, 4, true, 2.0, 6);
  // Keep the random modes inside |k| <= 8 so two doublings stay in band.
  Field v(lat);
  std::vector<int> k(2);
  for (std::size_t f = 0; f < u.coeffs().size(); ++f) {
    lat.decode(f, k);
    if (std::abs(k[0]) <= 8 && std::abs(k[1]) <= 8) v.coeffs()[f] = u.coeffs()[f];
  }
  v.set_coeff(std::array<int, 2>{3, -2}, {1.0, 0.5});

  CHECK(fsx::test::max_coeff_diff(dilate(v, 0), v) == 0.0);

  const std::array<int, 2> k10{1, 0}, k40{4, 0};
  CHECK(fsx::test::max_coeff_diff(dilate(Field::plane_wave(lat, k10), 2), Field::plane_wave(lat, k40)) == 0.0);

  const Field d1 = dilate(v, 1);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto x = fsx::test::random_point(rng, 2, 0.0, kTwoPi);
    const std::vector<double> x2{2.0 * x[0], 2.0 * x[1]};
    CHECK(std::abs(evaluate(d1, x) - evaluate(v, x2)) < 1e-13);
  }
  CHECK(fsx::test::max_coeff_diff(dilate(dilate(v, 1), 1), dilate(v, 2)) == 0.0);

  const std::array<int, 2> k20{20, 0};
  CHECK_THROWS_AS(dilate(Field::plane_wave(lat, k20), 1), BandlimitExceeded);
}

TEST_CASE("field JSON format") {
  const Lattice lat = make_lattice(2, 4);
  const Field u = random_field(lat, 8, false, 1.0, 5);
  const Field back = field_from_json(field_to_json(u));
  CHECK(back.lattice() == lat);
  CHECK(fsx::test::max_coeff_diff(back, u) == 0.0);

  nlohmann::json dup = {{"n", 1}, {"K", 2}, {"L", kTwoPi}, {"modes", {{1, 1.0, 0.0}, {1, 2.0, 0.0}}}};
  CHECK_THROWS_AS(field_from_json(dup), InvalidParameter);
  nlohmann::json out = {{"n", 1}, {"K", 2}, {"modes", {{3, 1.0, 0.0}}}};
  CHECK_THROWS_AS(field_from_json(out), BandlimitExceeded);
  nlohmann::json unordered = {{"n", 1}, {"K", 2}, {"modes", {{2, 1.0, 0.0}, {-1, 0.0, 3.0}}}};
  const Field f = field_from_json(unordered);
  CHECK(f.coeff(std::array<int, 1>{-1}) == Complex{0.0, 3.0});
  CHECK_THROWS_AS(read_field("/nonexistent/dir/field.json"), IoError);
}
