// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cmath>

#include "fsx/error.hpp"
#include "fsx/littlewood_paley.hpp"
#include "fsx/norms.hpp"
#include "test_support.hpp"

using namespace fsx;
using fsx::test::max_coeff_diff;
using fsx::test::random_field;
using fsx::test::rel_coeff_diff;

namespace {

const Lattice kLat = make_lattice(2, 32);
Field wave(int a, int b) { return Field::plane_wave(kLat, std::array<int, 2>{a, b}); }

// Independent restatement of the cut-off profile.
double chi_oracle(double r) {
  if (r <= 0.75) return 1.0;
  if (r >= 4.0 / 3.0) return 0.0;
  const double t = (4.0 / 3.0 - r) / (4.0 / 3.0 - 0.75);
  const double a = std::exp(-1.0 / t);
  const double b = (1.0 - t) > 0 ? std::exp(-1.0 / (1.0 - t)) : 0.0;
  return a / (a + b);
}

}  // namespace

TEST_CASE("profile plateau, support and monotonicity") {
  CHECK(lp_profile(0.0) == 1.0);
  CHECK(lp_profile(0.75) == 1.0);
  CHECK(lp_profile(4.0 / 3.0) == 0.0);
  CHECK(lp_profile(10.0) == 0.0);
  double prev = 1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double r = 0.7 + 0.7 * i / 1000.0;
    const double v = lp_profile(r);
    CHECK(v <= prev);
    CHECK(v == doctest::Approx(chi_oracle(r)).epsilon(1e-15));
    prev = v;
  }
}

TEST_CASE("build_dyadic_family on the default lattice") {
  const DyadicFamily fam = build_dyadic_family(kLat);
  CHECK(fam.j_min == -1);
  CHECK(fam.j_max == 5);

  // Direct evaluation over all lattice points with the oracle profile.
  double worst = 0.0;
  for (int a = -32; a <= 32; ++a)
    for (int b = -32; b <= 32; ++b) {
      if (a == 0 && b == 0) continue;
      const double r = std::hypot(double(a), double(b));
      double sum = 0.0;
      for (int j = -1; j <= 5; ++j) sum += chi_oracle(std::ldexp(r, -j - 1)) - chi_oracle(std::ldexp(r, -j));
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  CHECK(worst <= 1e-12);

  CHECK(fam.psi(0, 1.4) == 1.0);
  const double r11 = std::sqrt(2.0);
  for (int j = -1; j <= 5; ++j) CHECK(fam.psi(j, r11) == (j == 0 ? 1.0 : 0.0));

  const DyadicFamily small = build_dyadic_family(make_lattice(1, 1));
  CHECK(small.j_min <= small.j_max);
}

TEST_CASE("psi_j support is exact and blocks are nearly orthogonal") {
  const DyadicFamily fam = build_dyadic_family(kLat);
  for (int j = fam.j_min; j <= fam.j_max; ++j) {
    const double lo = 3.0 * std::ldexp(1.0, j - 2), hi = std::ldexp(1.0, j + 3) / 3.0;
    for (std::size_t f = 0; f < kLat.mode_count(); ++f) {
      const double r = std::sqrt(kLat.freq_norm2(f));
      if (r < lo || r > hi) CHECK(fam.psi(j, r) == 0.0);
    }
  }
  const Field u = random_field(kLat, 3);
  for (int j = fam.j_min; j <= fam.j_max; ++j)
    for (int jp = fam.j_min; jp <= fam.j_max; ++jp)
      if (std::abs(j - jp) >= 2) CHECK(delta_dot(delta_dot(u, j, fam), jp, fam).is_zero());
}

TEST_CASE("delta_dot and delta_inhom") {
  const DyadicFamily fam = build_dyadic_family(kLat);
  CHECK(max_coeff_diff(delta_dot(wave(1, 1), 0, fam), wave(1, 1)) == 0.0);

  Field low = wave(1, 0) + wave(2, 0) + wave(1, -1);
  CHECK(delta_dot(low, 3, fam).is_zero());
  CHECK_THROWS_AS(delta_dot(low, 6, fam), IndexOutOfRange);
  CHECK_THROWS_AS(delta_dot(low, -2, fam), IndexOutOfRange);

  const Field u = random_field(kLat, 4);
  Field sum(kLat);
  for (int j = fam.j_min; j <= fam.j_max; ++j) sum += delta_dot(u, j, fam);
  CHECK(rel_coeff_diff(sum, u) < 1e-12);

  const Field with_dc = random_field(kLat, 4, false);
  Field sum_dc(kLat);
  for (int j = fam.j_min; j <= fam.j_max; ++j) sum_dc += delta_dot(with_dc, j, fam);
  CHECK(rel_coeff_diff(sum_dc + Field::constant(kLat, with_dc.dc()), with_dc) < 1e-12);

  const Field c = Field::constant(kLat, 2.5);
  CHECK(max_coeff_diff(delta_inhom(c, -1, fam), c) == 0.0);
  CHECK(delta_inhom(u, -2, fam).is_zero());
  CHECK(delta_inhom(u, -7, fam).is_zero());
  CHECK(max_coeff_diff(delta_inhom(u, 0, fam), delta_dot(u, 0, fam)) < 1e-14);

  Field inh(kLat);
  for (int k = -1; k <= fam.j_max; ++k) inh += delta_inhom(with_dc, k, fam);
  CHECK(rel_coeff_diff(inh, with_dc) < 1e-12);
}

TEST_CASE("low_pass identities") {
  const DyadicFamily fam = build_dyadic_family(kLat);
  const Field u = random_field(kLat, 5, false);
  CHECK(max_coeff_diff(low_pass(u, 20, fam), u) == 0.0);
  const Field dc_only = low_pass(u, -10, fam);
  CHECK(max_coeff_diff(dc_only, Field::constant(kLat, u.dc())) == 0.0);
  for (int j = fam.j_min; j <= fam.j_max; ++j) {
    const Field diff = low_pass(u, j + 1, fam) - low_pass(u, j, fam);
    CHECK(max_coeff_diff(diff, delta_dot(u, j, fam)) < 1e-13 * u.max_abs_coeff());
  }
}

TEST_CASE("decompose and reconstruct") {
  const DyadicFamily fam = build_dyadic_family(kLat);
  const BlockSeq one = decompose(wave(1, 1), fam);
  int nonzero = 0;
  for (const auto& [j, b] : one.blocks) nonzero += b.is_zero() ? 0 : 1;
  CHECK(nonzero == 1);
  CHECK(max_coeff_diff(reconstruct(one), wave(1, 1)) < 1e-15);

  const BlockSeq zero = decompose(Field(kLat), fam);
  for (const auto& [j, b] : zero.blocks) CHECK(b.is_zero());

  CHECK_THROWS_AS(decompose(random_field(kLat, 1, false), fam), HomogeneousDCViolation);

  // Same plane wave in every slot: per-mode oracle sum_j psi_j (w_{j-1}+w_j+w_{j+1}).
  BlockSeq same{fam, {}, std::nullopt};
  const Field w = wave(5, 3);
  for (int j = fam.j_min - 1; j <= fam.j_max + 1; ++j) same.blocks.emplace(j, w);
  const double r = std::hypot(5.0, 3.0);
  double oracle = 0.0;
  for (int j = fam.j_min; j <= fam.j_max; ++j) oracle += 3.0 * (chi_oracle(std::ldexp(r, -j - 1)) - chi_oracle(std::ldexp(r, -j)));
  CHECK(std::abs(reconstruct(same).coeff(std::array<int, 2>{5, 3}) - Complex{oracle}) < 1e-14);

  for (int seed = 0; seed < 100; ++seed) {
    const Field u = random_field(kLat, 1000 + seed);
    const Field back = reconstruct(decompose(u, fam));
    CHECK(rel_coeff_diff(back, u) < 1e-12);
    Field blocksum(kLat);
    for (const auto& [j, b] : decompose(u, fam).blocks) blocksum += b;
    CHECK(rel_coeff_diff(blocksum, u) < 1e-12);
  }
}

TEST_CASE("blocks are uniformly bounded on L^p") {
  const DyadicFamily fam = build_dyadic_family(kLat);
  double worst = 0.0;
  for (int seed = 0; seed < 8; ++seed) {
    const Field u = random_field(kLat, 300 + seed, true, 1.0);
    for (double p : {1.0, 2.0, kInf}) {
      const double base = lp_norm(u, p);
      for (int j = fam.j_min; j <= fam.j_max; ++j) worst = std::max(worst, lp_norm(delta_dot(u, j, fam), p) / base);
    }
  }
  MESSAGE("max ||Delta_j u||_p / ||u||_p = " << worst);
  CHECK(worst <= 3.0);
}
