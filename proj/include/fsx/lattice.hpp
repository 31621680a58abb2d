// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace fsx {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Relative tolerance on the DC coefficient below which a field counts as
/// zero-mean (the stand-in for membership in the homogeneous class).
inline constexpr double kDcTolerance = 1e-12;

/// Frequency lattice of the n-torus [0, L)^n truncated to max_i |k_i| <= K.
/// Mode k carries the frequency xi = (2 pi / L) k.
struct Lattice {
  int n = 2;
  int K = 32;
  double L = kTwoPi;

  int side() const { return 2 * K + 1; }
  std::size_t mode_count() const;
  double freq_scale() const { return kTwoPi / L; }

  bool contains(std::span<const int> k) const;
  std::size_t encode(std::span<const int> k) const;
  void decode(std::size_t flat, std::span<int> k) const;

  /// |xi|^2 for the mode stored at `flat`.
  double freq_norm2(std::size_t flat) const;
  void frequency(std::size_t flat, std::span<double> xi) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;
};

Lattice make_lattice(int n, int K, double L = kTwoPi);

/// Smallest power of two that is at least max(oversample * 2K, 2K + 2).
int default_grid_size(int K, int oversample = 4);

/// Band-limited trigonometric polynomial u(x) = sum_k c_k exp(i xi_k . x),
/// stored densely over the lattice in row-major order (axis 0 slowest).
class Field {
 public:
  Field() = default;
  explicit Field(Lattice lattice);
  Field(Lattice lattice, std::vector<Complex> coeffs);

  static Field plane_wave(const Lattice& lattice, std::span<const int> k, Complex amplitude = 1.0);
  static Field constant(const Lattice& lattice, Complex value);

  const Lattice& lattice() const { return lattice_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }

  Complex coeff(std::span<const int> k) const;
  void set_coeff(std::span<const int> k, Complex value);
  Complex dc() const;

  double max_abs_coeff() const;
  double l2_coeff_norm() const;
  bool is_zero() const;

  /// |c_0| <= tol * max_k |c_k|.
  bool is_homogeneous_admissible(double tol = kDcTolerance) const;

  /// Same field re-expressed on a larger (or equal) bandlimit.
  Field embed(const Lattice& larger) const;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(Complex scale);

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(Field a, Complex s) { return a *= s; }
  friend Field operator*(Complex s, Field a) { return a *= s; }

 private:
  Lattice lattice_;
  std::vector<Complex> coeffs_;
};

/// Values of a field on the uniform grid x = (L/M) j, j in [0, M)^n,
/// row-major with the last axis (x_n) fastest.
struct SampleGrid {
  Lattice lattice;
  int M = 0;
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
  void point(std::size_t flat, std::span<double> x) const;
  /// Grid index along the vertical axis of the sample at `flat`.
  int vertical_index(std::size_t flat) const { return static_cast<int>(flat % M); }
};

struct Projection {
  Field field;
  /// ||discarded DFT modes||_2 / ||all DFT modes||_2, zero for zero samples.
  double residual = 0.0;
};

/// Exact trigonometric sum at an arbitrary real point.
Complex evaluate(const Field& u, std::span<const double> x);

SampleGrid sample_grid(const Field& u, int M);

/// Samples an arbitrary point function on the M-grid of `lattice`.
using PointFunction = std::function<Complex(std::span<const double>)>;
SampleGrid sample_function(const Lattice& lattice, int M, const PointFunction& fn);

/// Forward DFT of the samples truncated to the bandlimit of `target`.
Projection project_bandlimited(const SampleGrid& samples, const Lattice& target);

/// x -> u(2^m x); mode k moves to 2^m k.
Field dilate(const Field& u, int m);

/// Evaluates a field along vertical columns: for a fixed height y, the values
/// at every horizontal grid point x' = (L/M) j'. Precomputes the horizontal
/// transforms once so off-grid heights cost O(M^{n-1} (2K+1)).
class ColumnEvaluator {
 public:
  ColumnEvaluator(const Field& u, int M);

  int M() const { return M_; }
  std::size_t columns() const { return columns_; }
  /// Values at height y for every horizontal grid point, in row-major order.
  std::vector<Complex> row(double y) const;

 private:
  Lattice lattice_;
  int M_;
  std::size_t columns_;
  // columns_ x (2K+1): horizontal partial sums for each vertical mode.
  std::vector<Complex> partial_;
};

namespace detail {
/// In-place unnormalized multidimensional DFT on an M^n row-major array.
/// sign = -1 forward, +1 inverse.
void fft_inplace(std::vector<Complex>& data, int n, int M, int sign);
}  // namespace detail

}  // namespace fsx
