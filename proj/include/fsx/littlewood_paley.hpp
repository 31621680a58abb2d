// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>

#include "fsx/lattice.hpp"
#include "fsx/multipliers.hpp"

namespace fsx {

/// Smooth radial cut: 1 on [0, 3/4], 0 on [4/3, inf), C-infinity and
/// nonincreasing in between.
double lp_profile(double r);

/// Littlewood-Paley family on a lattice. phi(xi) = chi(|xi|) and
/// psi_j(xi) = phi(2^{-j-1} xi) - phi(2^{-j} xi); the j-range is the minimal
/// one for which sum_j psi_j telescopes to exactly 1 on every nonzero lattice
/// frequency.
struct DyadicFamily {
  Lattice lattice;
  int j_min = 0;
  int j_max = 0;

  double phi(double r) const { return lp_profile(r); }
  /// phi_j(r) = phi(2^{-j} r).
  double phi_j(int j, double r) const;
  double psi(int j, double r) const;
  bool in_range(int j) const { return j >= j_min && j <= j_max; }
};

DyadicFamily build_dyadic_family(const Lattice& lattice);

/// Homogeneous block Delta_j u.
Field delta_dot(const Field& u, int j, const DyadicFamily& fam);

/// Inhomogeneous block: Delta_{-1} = phi(D), Delta_k = Delta_dot_k for k >= 0,
/// zero for k <= -2.
Field delta_inhom(const Field& u, int k, const DyadicFamily& fam);

/// Low-pass S_j = phi(2^{-j} D).
Field low_pass(const Field& u, int j, const DyadicFamily& fam);

struct BlockSeq {
  DyadicFamily family;
  std::map<int, Field> blocks;
  std::optional<Field> low;  // Delta_{-1} u of the inhomogeneous decomposition
};

/// Homogeneous decomposition (Delta_j u)_{j_min <= j <= j_max}.
BlockSeq decompose(const Field& u, const DyadicFamily& fam);

/// Inhomogeneous decomposition: `low` = Delta_{-1} u and blocks k in [0, j_max].
BlockSeq decompose_inhom(const Field& u, const DyadicFamily& fam);

/// Retraction sum_j Delta_j [w_{j-1} + w_j + w_{j+1}]; missing blocks are zero.
Field reconstruct(const BlockSeq& b);

}  // namespace fsx
