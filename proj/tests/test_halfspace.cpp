// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "fsx/corpus.hpp"
#include "fsx/error.hpp"
#include "fsx/halfspace.hpp"
#include "fsx/multipliers.hpp"
#include "test_support.hpp"

using namespace fsx;
using fsx::test::random_field;

namespace {

constexpr double kPi = std::numbers::pi;
const Lattice kLat = make_lattice(2, 32);
const std::array<int, 1> kH1{1};
const std::array<int, 1> kH0{0};

// Gaussian elimination on sum_j alpha_j x_j^kappa = 1, x_j = -1/(j+1).
std::vector<double> vandermonde_oracle(int m) {
  const int n = m + 1;
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) a[r][j] = std::pow(-1.0 / (j + 1), r);
    a[r][n] = 1.0;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<double> x(n);
  for (int r = 0; r < n; ++r) x[r] = a[r][n] / a[r][r];
  return x;
}

// Restriction tolerance: the discarded share of the samples, relative to the
// kept norm.
double restriction_tol(double residual) { return 1e-10 + residual / std::sqrt(1.0 - residual * residual); }

PointFunction exact(const Field& u) {
  return [u](std::span<const double> x) { return evaluate(u, x); };
}

double grid_max(const Field& u, int rows_from, int rows_to) {
  const SampleGrid g = sample_grid(u, 256);
  double m = 0.0;
  for (std::size_t f = 0; f < g.values.size(); ++f) {
    const int iv = g.vertical_index(f);
    if (iv >= rows_from && iv < rows_to) m = std::max(m, std::abs(g.values[f]));
  }
  return m;
}

}  // namespace

TEST_CASE("reflection coefficients") {
  CHECK(reflection_coefficients(0).alpha == std::vector<double>{1.0});
  const auto a1 = reflection_coefficients(1).alpha;
  CHECK(a1[0] == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(a1[1] == doctest::Approx(4.0).epsilon(1e-12));
  const auto a2 = reflection_coefficients(2).alpha;
  CHECK(std::abs(a2[0] - 6.0) <= 1e-9);
  CHECK(std::abs(a2[1] + 32.0) <= 1e-9);
  CHECK(std::abs(a2[2] - 27.0) <= 1e-9);
  for (int m = 0; m <= 8; ++m) {
    const ReflectionCoeffs c = reflection_coefficients(m);
    const auto oracle = vandermonde_oracle(m);
    // Elimination loses digits as the weights grow to 1e9 at m = 8.
    const double tol = m <= 6 ? 1e-9 : 1e-6;
    for (int j = 0; j <= m; ++j) CHECK(c.alpha[j] == doctest::Approx(oracle[j]).epsilon(tol));
    if (m <= 6) CHECK(c.moment_residual() <= 1e-9);
  }
  const ReflectionCoeffs s = reflection_coefficients(1).shifted(1);
  CHECK(s.alpha[0] == doctest::Approx(3.0));
  CHECK(s.alpha[1] == doctest::Approx(-2.0));
  CHECK_THROWS_AS(reflection_coefficients(9), IllConditioned);
  CHECK_THROWS_AS(reflection_coefficients(-1), InvalidParameter);
}

TEST_CASE("half fields record leakage") {
  const HalfField b = make_half_field(strip_bump(kLat, kPi / 4, kH1, 32));
  CHECK(b.peak == doctest::Approx(1.0).epsilon(1e-12));
  // cos^64(5 pi / 16) at the near edge of the audited band.
  CHECK(b.leakage == doctest::Approx(std::pow(std::cos(5 * kPi / 16), 64)).epsilon(1e-6));
  CHECK(b.half_space_like());
  CHECK_FALSE(make_half_field(cosine_mode(kLat, kH1, 1)).half_space_like());

  const nlohmann::json j = half_field_to_json(b);
  CHECK(j.at("halfspace") == true);
  CHECK(j.at("leakage").get<double>() == b.leakage);
  const HalfField back = half_field_from_json(j);
  CHECK(fsx::test::max_coeff_diff(back.field, b.field) == 0.0);
  CHECK_THROWS_AS(half_field_from_json(nlohmann::json{{"n", 1}, {"K", 1}, {"modes", nlohmann::json::array()}}),
                  InvalidParameter);
}

TEST_CASE("extension examples") {
  // Even reflection of odd data: restriction reproduces u.
  const Field s = sine_mode(kLat, kH1, 1);
  const Projection e0 = extend_reflect(make_half_field(s), 0);
  CHECK(restriction_mismatch(e0.field, s) <= restriction_tol(e0.residual));
  std::mt19937_64 rng(3);
  const PointFunction even = reflect_pointwise(exact(s), kLat, reflection_coefficients(0), Side::upper);
  for (int i = 0; i < 20; ++i) {
    auto x = fsx::test::random_point(rng, 2, 0.0, kTwoPi);
    x[1] = -std::abs(std::fmod(x[1], kPi));
    // sin|x_n| e^{i x_1} below the boundary.
    const Complex want = std::sin(std::abs(x[1])) * std::exp(Complex{0.0, x[0]});
    CHECK(std::abs(even(x) - want) < 1e-14);
  }

  for (int m = 0; m <= 4; ++m) {
    const Projection one = extend_reflect(make_half_field(Field::constant(kLat, 1.0)), m);
    CHECK(one.residual <= 1e-12);
    CHECK(fsx::test::max_coeff_diff(one.field, Field::constant(kLat, 1.0)) <= 1e-12);
  }

  const HalfField loud = make_half_field(cosine_mode(kLat, kH1, 1));
  CHECK_THROWS_AS(extend_reflect(loud, 1, Side::upper, ExtendOptions{0, 1e-8}), LeakageTooLarge);
  CHECK_NOTHROW(extend_reflect(make_half_field(strip_bump(kLat, kPi / 4, kH1, 32)), 1, Side::upper, ExtendOptions{0, 1e-8}));
}

TEST_CASE("higher-order reflection is C^m across the boundary") {
  // Generic Taylor data at x_n = 0: nonzero first and second derivatives.
  const Field data = strip_bump(kLat, kPi / 4, kH1, 32) + sine_mode(kLat, kH1, 1, 0.5);
  auto jumps = [&](int m, double h) {
    const PointFunction f = reflect_pointwise(exact(data), kLat, reflection_coefficients(m), Side::upper);
    auto at = [&](double xn) { return f(std::array<double, 2>{0.7, xn}); };
    const Complex d1p = (-3.0 * at(0) + 4.0 * at(h) - at(2 * h)) / (2 * h);
    const Complex d1m = (3.0 * at(0) - 4.0 * at(-h) + at(-2 * h)) / (2 * h);
    const Complex d2p = (at(0) - 2.0 * at(h) + at(2 * h)) / (h * h);
    const Complex d2m = (at(0) - 2.0 * at(-h) + at(-2 * h)) / (h * h);
    return std::pair{std::abs(d1p - d1m), std::abs(d2p - d2m)};
  };
  const double h = 1e-3;
  const auto [k0, k0b] = jumps(0, h);
  CHECK(k0 > 0.1);  // plain even reflection has a kink
  (void)k0b;
  // m = 1: first derivatives match at second order, the curvature jumps.
  const auto [a1, a2] = jumps(1, h);
  const auto [b1, b2] = jumps(1, h / 2);
  CHECK(b1 / a1 < 0.3);
  CHECK(b2 / a2 > 0.9);
  CHECK(b2 > 0.1);
  // m = 2: one-sided second differences agree to O(h).
  const auto [c1, c2] = jumps(2, h);
  const auto [d1, d2] = jumps(2, h / 2);
  CHECK(d1 / c1 < 0.3);
  CHECK(d2 / c2 == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("restriction identity over corpora") {
  const Corpus bumps = generate_corpus(5, CorpusKind::boundary_bump, 6, kLat);
  const Corpus sines = generate_corpus(6, CorpusKind::sine_strip, 6, kLat);
  double worst_bump_residual = 0.0;
  for (const Corpus* c : {&bumps, &sines})
    for (std::size_t i = 0; i < c->size(); ++i)
      for (int m = 0; m <= 4; ++m) {
        const Projection e = extend_reflect(c->half(i), m);
        CHECK(restriction_mismatch(e.field, c->fields[i]) <= restriction_tol(e.residual));
        if (c == &bumps && m <= 1) worst_bump_residual = std::max(worst_bump_residual, e.residual);
      }
  MESSAGE("bump extension residual (m <= 1) " << worst_bump_residual);
  CHECK(worst_bump_residual <= 1e-3);
}

TEST_CASE("tangential derivatives commute with the extension") {
  const Corpus bumps = generate_corpus(9, CorpusKind::boundary_bump, 4, kLat);
  const std::array<int, 2> d1{1, 0};
  for (std::size_t i = 0; i < bumps.size(); ++i)
    for (int m : {0, 2, 4}) {
      const Field lhs = derivative(extend_reflect(bumps.half(i), m).field, d1);
      const Field rhs = extend_reflect(make_half_field(derivative(bumps.fields[i], d1)), m).field;
      CHECK(fsx::test::rel_coeff_diff(lhs, rhs) <= 1e-9);
    }
}

TEST_CASE("normal derivative obeys the shifted reflection") {
  const Field u = strip_bump(kLat, kPi / 4, kH1, 32) + sine_mode(kLat, kH1, 2, 0.5);
  const std::array<int, 2> dn{0, 1};
  const Field du = derivative(u, dn);
  std::mt19937_64 rng(11);
  for (int m : {1, 2, 3}) {
    const ReflectionCoeffs c = reflection_coefficients(m);
    const PointFunction e = reflect_pointwise(exact(u), kLat, c, Side::upper);
    const PointFunction e1 = reflect_pointwise(exact(du), kLat, c.shifted(1), Side::upper);
    for (int t = 0; t < 10; ++t) {
      std::vector<double> x = fsx::test::random_point(rng, 2, 0.0, kTwoPi);
      x[1] = -0.2 - 2.5 * std::abs(std::sin(x[1]));
      const double h = 1e-5;
      std::vector<double> xp = x, xm = x;
      xp[1] += h;
      xm[1] -= h;
      const Complex fd = (e(xp) - e(xm)) / (2 * h);
      CHECK(std::abs(fd - e1(x)) <= 1e-6 * (1 + std::abs(fd)));
    }
  }
}

TEST_CASE("zero-boundary projection") {
  const Field upper = strip_bump(kLat, kPi / 2, kH1, 32);
  const Field lower = strip_bump(kLat, -kPi / 2, kH1, 32);
  // Fixed points: fields carried by the upper strip.
  for (int m : {0, 1}) {
    const Projection p = project_zero(upper, m);
    CHECK(fsx::test::max_coeff_diff(p.field, upper) <= 1e-8 * upper.max_abs_coeff());
  }

  // A lower-strip bump is moved onto its negative mirror image: the output
  // vanishes below the boundary and equals -b(x', -x_n) above it.
  const Projection pl = project_zero(lower, 0);
  CHECK(grid_max(pl.field, 129, 256) <= 1e-8 + pl.residual);
  CHECK(fsx::test::max_coeff_diff(pl.field, -1.0 * mirror_vertical(lower)) <= 1e-8);
  // ... and fields of the form E^- b lie in its kernel.
  const Field ext = extend_reflect(make_half_field(mirror_vertical(lower)), 0).field;
  const Field e_minus = mirror_vertical(ext);
  CHECK(project_zero(e_minus, 0).field.max_abs_coeff() <= 1e-8);

  // Idempotence of the exact formula on random fields.
  std::mt19937_64 rng(2);
  for (int seed = 0; seed < 5; ++seed) {
    const Field u = random_field(kLat, 60 + seed, false, 2.0, 20);
    for (int m : {0, 1, 3}) {
      const PointFunction p = project_zero_pointwise(exact(u), kLat, m);
      const PointFunction pp = project_zero_pointwise(p, kLat, m);
      for (int t = 0; t < 10; ++t) {
        const auto x = fsx::test::random_point(rng, 2, -kPi, kPi);
        CHECK(std::abs(pp(x) - p(x)) <= 1e-12 * (1 + std::abs(p(x))));
        if (x[1] < 0) CHECK(p(x) == Complex{});
      }
    }
  }
}

TEST_CASE("parity reflections") {
  const Field s2 = sine_mode(kLat, kH1, 2);
  const Projection d = reflect_parity(make_half_field(s2), Parity::odd);
  CHECK(d.residual <= 1e-12);
  CHECK(fsx::test::max_coeff_diff(d.field, s2) <= 1e-12);
  const Field c1 = cosine_mode(kLat, kH0, 1);
  const Projection n = reflect_parity(make_half_field(c1), Parity::even);
  CHECK(n.residual <= 1e-12);
  CHECK(fsx::test::max_coeff_diff(n.field, c1) <= 1e-12);
  CHECK(std::abs(d.field.dc()) == 0.0);

  const double r32 = reflect_parity(make_half_field(c1), Parity::odd).residual;
  const Lattice big = make_lattice(2, 64);
  const double r64 = reflect_parity(make_half_field(cosine_mode(big, kH0, 1)), Parity::odd).residual;
  MESSAGE("odd reflection of cos: residual K=32 " << r32 << ", K=64 " << r64);
  CHECK(r64 < r32);
}

TEST_CASE("indicator multiplication") {
  const Field bump = strip_bump(kLat, kPi / 2, kH1, 32);
  const Projection b = indicator_multiply(bump);
  CHECK(b.field.lattice().K == 128);
  CHECK(b.residual <= 1e-10);
  CHECK(fsx::test::max_coeff_diff(b.field, bump.embed(b.field.lattice())) <= 1e-9);

  const Projection one = indicator_multiply(Field::constant(kLat, 1.0));
  const double exact_norm = std::sqrt(4 * kPi * kPi / 2);
  CHECK(std::abs(lp_norm(one.field, 2.0) - exact_norm) <= one.residual * one.residual * exact_norm);
  CHECK(one.field.dc().real() == doctest::Approx(0.5));
}

TEST_CASE("restriction norm") {
  const Field c = cosine_mode(kLat, kH0, 1);
  for (double p : {2.0, 4.0}) {
    const RestrictionNorm r = restriction_norm(make_half_field(c), SpaceSpec{Family::Lp, 0, p, 2, Domain::halfspace});
    REQUIRE(r.lower_bound);
    CHECK(r.value >= *r.lower_bound * (1 - 1e-9));
    double en = 0.0;
    for (const auto& [id, v] : r.candidates)
      if (id == "E_N") en = v;
    CHECK(en == doctest::Approx(lp_norm(c, p)).epsilon(1e-12));
    CHECK(en == doctest::Approx(std::pow(2.0, 1 / p) * *r.lower_bound).epsilon(1e-9));
  }

  const Field s = sine_mode(kLat, kH0, 1);
  const RestrictionNorm rs = restriction_norm(make_half_field(s), SpaceSpec{Family::Hdot, 1, 2, 2, Domain::halfspace});
  CHECK(rs.witness == "E_D");
  CHECK(rs.value == doctest::Approx(std::sqrt(2.0) * kPi).epsilon(1e-12));

  const RestrictionNorm z = restriction_norm(make_half_field(Field(kLat)), SpaceSpec{Family::Hdot, 1, 2, 2, Domain::halfspace});
  CHECK(z.value == 0.0);
  CHECK_THROWS_AS(restriction_norm(make_half_field(s), SpaceSpec{Family::Hdot, 1, 2, 2, Domain::whole}), InvalidParameter);
}

TEST_CASE("half-space gradient norm equivalence") {
  const Corpus bumps = generate_corpus(21, CorpusKind::boundary_bump, 3, kLat);
  const Corpus sines = generate_corpus(22, CorpusKind::sine_strip, 3, kLat);
  double worst = 1.0;
  for (const Corpus* c : {&bumps, &sines})
    for (std::size_t i = 0; i < c->size(); ++i)
      for (double s : {1.0, 1.5}) {
        const Field& u = c->fields[i];
        const double base = restriction_norm(make_half_field(u), SpaceSpec{Family::Hdot, s, 2, 2, Domain::halfspace}).value;
        double grad = 0.0;
        for (int d = 0; d < 2; ++d) {
          std::array<int, 2> a{0, 0};
          a[d] = 1;
          const double v =
              restriction_norm(make_half_field(derivative(u, a)), SpaceSpec{Family::Hdot, s - 1, 2, 2, Domain::halfspace}).value;
          grad += v * v;
        }
        const double r = std::sqrt(grad) / base;
        worst = std::max({worst, r, 1 / r});
      }
  MESSAGE("half-space gradient equivalence constant " << worst);
  CHECK(worst <= 20.0);
}

TEST_CASE("one extension bounds two norms at once") {
  const Corpus bumps = generate_corpus(31, CorpusKind::boundary_bump, 3, kLat);
  const SpaceSpec a{Family::Hdot, 0.5, 2, 2, Domain::halfspace}, b{Family::Hdot, 1.2, 4, 2, Domain::halfspace};
  double ca = 0.0, cb = 0.0;
  for (std::size_t i = 0; i < bumps.size(); ++i) {
    const HalfField u = bumps.half(i);
    const Field e = extend_reflect(u, 2).field;
    ca = std::max(ca, sobolev_norm(e, SpaceSpec{Family::Hdot, 0.5, 2}) / restriction_norm(u, a).value);
    cb = std::max(cb, sobolev_norm(e, SpaceSpec{Family::Hdot, 1.2, 4}) / restriction_norm(u, b).value);
  }
  MESSAGE("E2 constants: Hdot^{0.5,2} " << ca << ", Hdot^{1.2,4} " << cb);
  CHECK(ca >= 1.0 - 1e-12);
  CHECK(cb >= 1.0 - 1e-12);
  CHECK(ca <= 50.0);
  CHECK(cb <= 50.0);
}
