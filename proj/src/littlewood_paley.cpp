// SPDX-License-Identifier: Apache-2.0
#include "fsx/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fsx/error.hpp"

namespace fsx {

namespace {

constexpr double kInner = 3.0 / 4.0;
constexpr double kOuter = 4.0 / 3.0;

double bump_h(double t) { return t <= 0.0 ? 0.0 : std::exp(-1.0 / t); }

// Multiplies one mode array by a radial weight evaluated at |xi|.
template <class Weight>
Field apply_radial(const Field& u, Weight&& weight) {
  const Lattice& lat = u.lattice();
  Field out(lat);
  const auto in = u.coeffs();
  auto dst = out.coeffs();
  for (std::size_t flat = 0; flat < in.size(); ++flat) {
    if (in[flat] == Complex{}) continue;
    dst[flat] = weight(std::sqrt(lat.freq_norm2(flat))) * in[flat];
  }
  return out;
}

}  // namespace

double lp_profile(double r) {
  if (r <= kInner) return 1.0;
  if (r >= kOuter) return 0.0;
  const double t = (kOuter - r) / (kOuter - kInner);
  const double a = bump_h(t);
  const double b = bump_h(1.0 - t);
  return a / (a + b);
}

double DyadicFamily::phi_j(int j, double r) const { return lp_profile(std::ldexp(r, -j)); }

double DyadicFamily::psi(int j, double r) const {
  return lp_profile(std::ldexp(r, -j - 1)) - lp_profile(std::ldexp(r, -j));
}

DyadicFamily build_dyadic_family(const Lattice& lattice) {
  if (lattice.K < 1) throw LatticeTooSmall("lattice has no nonzero frequency");
  const double r_min = lattice.freq_scale();
  const double r_max = lattice.freq_scale() * lattice.K * std::sqrt(static_cast<double>(lattice.n));

  // Largest j_min with phi(2^{-j_min} r_min) = 0, smallest j_max with
  // phi(2^{-j_max-1} r_max) = 1.
  int j_min = static_cast<int>(std::floor(std::log2(r_min / kOuter))) + 1;
  while (std::ldexp(r_min, -j_min) < kOuter) --j_min;
  while (std::ldexp(r_min, -(j_min + 1)) >= kOuter) ++j_min;
  int j_max = static_cast<int>(std::ceil(std::log2(r_max / kInner))) - 2;
  while (std::ldexp(r_max, -(j_max + 1)) > kInner) ++j_max;
  while (std::ldexp(r_max, -j_max) <= kInner) --j_max;
  if (j_max < j_min) throw LatticeTooSmall("no valid dyadic range for this lattice");

  DyadicFamily fam{lattice, j_min, j_max};

  // Telescoping exactness over every nonzero lattice frequency.
  const std::size_t count = lattice.mode_count();
  const std::size_t zero = count / 2;
  for (std::size_t flat = 0; flat < count; ++flat) {
    if (flat == zero) continue;
    const double r = std::sqrt(lattice.freq_norm2(flat));
    double sum = 0.0;
    for (int j = j_min; j <= j_max; ++j) sum += fam.psi(j, r);
    if (std::abs(sum - 1.0) > 1e-12)
      throw LatticeTooSmall("dyadic partition does not telescope to 1 at |xi| = " + std::to_string(r));
  }
  return fam;
}

Field delta_dot(const Field& u, int j, const DyadicFamily& fam) {
  if (!fam.in_range(j))
    throw IndexOutOfRange("block index " + std::to_string(j) + " outside [" + std::to_string(fam.j_min) + ", " +
                          std::to_string(fam.j_max) + "]");
  return apply_radial(u, [&](double r) { return fam.psi(j, r); });
}

Field delta_inhom(const Field& u, int k, const DyadicFamily& fam) {
  if (k <= -2) return Field(u.lattice());
  if (k == -1) return apply_radial(u, [&](double r) { return fam.phi(r); });
  if (k > fam.j_max) return Field(u.lattice());
  return apply_radial(u, [&](double r) { return fam.psi(k, r); });
}

Field low_pass(const Field& u, int j, const DyadicFamily& fam) {
  return apply_radial(u, [&](double r) { return fam.phi_j(j, r); });
}

BlockSeq decompose(const Field& u, const DyadicFamily& fam) {
  if (!u.is_homogeneous_admissible())
    throw HomogeneousDCViolation("homogeneous decomposition requires a zero-mean field");
  BlockSeq seq{fam, {}, std::nullopt};
  for (int j = fam.j_min; j <= fam.j_max; ++j) seq.blocks.emplace(j, delta_dot(u, j, fam));
  return seq;
}

BlockSeq decompose_inhom(const Field& u, const DyadicFamily& fam) {
  BlockSeq seq{fam, {}, delta_inhom(u, -1, fam)};
  for (int k = 0; k <= fam.j_max; ++k) seq.blocks.emplace(k, delta_inhom(u, k, fam));
  return seq;
}

Field reconstruct(const BlockSeq& b) {
  const DyadicFamily& fam = b.family;
  Field out(fam.lattice);
  auto block = [&](int j) -> const Field* {
    auto it = b.blocks.find(j);
    return it == b.blocks.end() ? nullptr : &it->second;
  };
  for (int j = fam.j_min; j <= fam.j_max; ++j) {
    Field sum(fam.lattice);
    bool any = false;
    for (int d = -1; d <= 1; ++d) {
      if (const Field* w = block(j + d)) {
        sum += *w;
        any = true;
      }
    }
    if (any) out += delta_dot(sum, j, fam);
  }
  return out;
}

}  // namespace fsx
