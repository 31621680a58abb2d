// SPDX-License-Identifier: Apache-2.0
#include "fsx/lattice.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "fsx/error.hpp"

namespace fsx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::AliasingRisk: return "AliasingRisk";
    case ErrorCode::BandlimitExceeded: return "BandlimitExceeded";
    case ErrorCode::HomogeneousDCViolation: return "HomogeneousDCViolation";
    case ErrorCode::SpectrumHit: return "SpectrumHit";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LatticeTooSmall: return "LatticeTooSmall";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::NotHilbertCouple: return "NotHilbertCouple";
    case ErrorCode::ZeroField: return "ZeroField";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::LeakageTooLarge: return "LeakageTooLarge";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Index of wavenumber k (possibly negative) in an M-point DFT array.
int wrap(int k, int M) { return ((k % M) + M) % M; }

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Lattice

std::size_t Lattice::mode_count() const { return ipow(static_cast<std::size_t>(side()), n); }

bool Lattice::contains(std::span<const int> k) const {
  if (static_cast<int>(k.size()) != n) return false;
  return std::all_of(k.begin(), k.end(), [this](int ki) { return std::abs(ki) <= K; });
}

std::size_t Lattice::encode(std::span<const int> k) const {
  std::size_t flat = 0;
  for (int i = 0; i < n; ++i) flat = flat * side() + static_cast<std::size_t>(k[i] + K);
  return flat;
}

void Lattice::decode(std::size_t flat, std::span<int> k) const {
  for (int i = n - 1; i >= 0; --i) {
    k[i] = static_cast<int>(flat % side()) - K;
    flat /= side();
  }
}

double Lattice::freq_norm2(std::size_t flat) const {
  const double w = freq_scale();
  double r2 = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    const double xi = w * (static_cast<int>(flat % side()) - K);
    r2 += xi * xi;
    flat /= side();
  }
  return r2;
}

void Lattice::frequency(std::size_t flat, std::span<double> xi) const {
  const double w = freq_scale();
  for (int i = n - 1; i >= 0; --i) {
    xi[i] = w * (static_cast<int>(flat % side()) - K);
    flat /= side();
  }
}

Lattice make_lattice(int n, int K, double L) {
  if (n < 1) throw InvalidParameter("dimension must be >= 1, got " + std::to_string(n));
  if (K < 1) throw InvalidParameter("bandlimit must be >= 1, got " + std::to_string(K));
  if (!(L > 0.0) || !std::isfinite(L)) throw InvalidParameter("period must be positive and finite");
  return Lattice{n, K, L};
}

int default_grid_size(int K, int oversample) {
  const int need = std::max(oversample * 2 * K, 2 * K + 2);
  int M = 2;
  while (M < need) M *= 2;
  return M;
}

// ---------------------------------------------------------------------------
// Field

Field::Field(Lattice lattice) : lattice_(lattice), coeffs_(lattice.mode_count(), Complex{}) {}

Field::Field(Lattice lattice, std::vector<Complex> coeffs) : lattice_(lattice), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != lattice_.mode_count())
    throw InvalidParameter("coefficient count does not match lattice");
}

Field Field::plane_wave(const Lattice& lattice, std::span<const int> k, Complex amplitude) {
  Field f(lattice);
  f.set_coeff(k, amplitude);
  return f;
}

Field Field::constant(const Lattice& lattice, Complex value) {
  Field f(lattice);
  f.coeffs_[lattice.mode_count() / 2] = value;
  return f;
}

Complex Field::coeff(std::span<const int> k) const {
  if (!lattice_.contains(k)) return {};
  return coeffs_[lattice_.encode(k)];
}

void Field::set_coeff(std::span<const int> k, Complex value) {
  if (!lattice_.contains(k)) throw BandlimitExceeded("mode outside lattice bandlimit");
  coeffs_[lattice_.encode(k)] = value;
}

// The zero mode sits in the middle of the dense array.
Complex Field::dc() const { return coeffs_.empty() ? Complex{} : coeffs_[coeffs_.size() / 2]; }

double Field::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Field::l2_coeff_norm() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

bool Field::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

bool Field::is_homogeneous_admissible(double tol) const {
  return std::abs(dc()) <= tol * max_abs_coeff();
}

Field Field::embed(const Lattice& larger) const {
  if (larger.n != lattice_.n || larger.L != lattice_.L || larger.K < lattice_.K)
    throw InvalidParameter("embedding requires a larger lattice of the same dimension and period");
  Field out(larger);
  std::vector<int> k(lattice_.n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == Complex{}) continue;
    lattice_.decode(i, k);
    out.coeffs_[larger.encode(k)] = coeffs_[i];
  }
  return out;
}

Field& Field::operator+=(const Field& other) {
  if (!(other.lattice_ == lattice_)) throw InvalidParameter("lattice mismatch in field sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  if (!(other.lattice_ == lattice_)) throw InvalidParameter("lattice mismatch in field difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Field& Field::operator*=(Complex scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

// ---------------------------------------------------------------------------
// Sampling

void SampleGrid::point(std::size_t flat, std::span<double> x) const {
  const double h = lattice.L / M;
  for (int i = lattice.n - 1; i >= 0; --i) {
    x[i] = h * static_cast<double>(flat % M);
    flat /= M;
  }
}

namespace detail {

void fft_inplace(std::vector<Complex>& data, int n, int M, int sign) {
  std::vector<int> dims(n, M);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(n, dims.data(), ptr, ptr, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace detail

Complex evaluate(const Field& u, std::span<const double> x) {
  const Lattice& lat = u.lattice();
  const int side = lat.side();
  // Per-axis phase tables e^{i w k x_i}, k in [-K, K].
  std::vector<Complex> phase(static_cast<std::size_t>(lat.n) * side);
  for (int i = 0; i < lat.n; ++i) {
    for (int k = -lat.K; k <= lat.K; ++k) {
      const double theta = lat.freq_scale() * k * x[i];
      phase[static_cast<std::size_t>(i) * side + (k + lat.K)] = std::polar(1.0, theta);
    }
  }
  const auto coeffs = u.coeffs();
  Complex sum{};
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    if (coeffs[flat] == Complex{}) continue;
    Complex term = coeffs[flat];
    std::size_t rest = flat;
    for (int i = lat.n - 1; i >= 0; --i) {
      term *= phase[static_cast<std::size_t>(i) * side + rest % side];
      rest /= side;
    }
    sum += term;
  }
  return sum;
}

SampleGrid sample_grid(const Field& u, int M) {
  const Lattice& lat = u.lattice();
  if (M < 2 * lat.K + 2)
    throw AliasingRisk("grid size " + std::to_string(M) + " < 2K+2 = " + std::to_string(2 * lat.K + 2));
  SampleGrid grid{lat, M, std::vector<Complex>(ipow(static_cast<std::size_t>(M), lat.n))};
  std::vector<int> k(lat.n);
  const auto coeffs = u.coeffs();
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    if (coeffs[flat] == Complex{}) continue;
    lat.decode(flat, k);
    std::size_t g = 0;
    for (int i = 0; i < lat.n; ++i) g = g * M + wrap(k[i], M);
    grid.values[g] = coeffs[flat];
  }
  detail::fft_inplace(grid.values, lat.n, M, FFTW_BACKWARD);
  return grid;
}

SampleGrid sample_function(const Lattice& lattice, int M, const PointFunction& fn) {
  if (M < 2 * lattice.K + 2) throw AliasingRisk("grid too coarse for lattice");
  SampleGrid grid{lattice, M, std::vector<Complex>(ipow(static_cast<std::size_t>(M), lattice.n))};
  std::vector<double> x(lattice.n);
  for (std::size_t flat = 0; flat < grid.values.size(); ++flat) {
    grid.point(flat, x);
    grid.values[flat] = fn(x);
  }
  return grid;
}

Projection project_bandlimited(const SampleGrid& samples, const Lattice& target) {
  const int M = samples.M;
  if (target.n != samples.lattice.n || target.L != samples.lattice.L)
    throw InvalidParameter("projection target must share dimension and period with the samples");
  if (M < 2 * target.K + 2)
    throw AliasingRisk("grid size " + std::to_string(M) + " too small for target bandlimit");
  std::vector<Complex> spec = samples.values;
  detail::fft_inplace(spec, target.n, M, FFTW_FORWARD);
  const double norm = 1.0 / static_cast<double>(spec.size());
  double total = 0.0;
  double discarded = 0.0;
  const int n = target.n;
  for (std::size_t g = 0; g < spec.size(); ++g) {
    spec[g] *= norm;
    const double e = std::norm(spec[g]);
    total += e;
    std::size_t rest = g;
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) {
      const int idx = static_cast<int>(rest % M);
      rest /= M;
      const int k = idx <= M / 2 ? idx : idx - M;
      inside = std::abs(k) <= target.K;
    }
    if (!inside) discarded += e;
  }
  Field out(target);
  std::vector<int> k(n);
  auto coeffs = out.coeffs();
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    target.decode(flat, k);
    std::size_t g = 0;
    for (int i = 0; i < n; ++i) g = g * M + wrap(k[i], M);
    coeffs[flat] = spec[g];
  }
  const double residual = total > 0.0 ? std::sqrt(discarded / total) : 0.0;
  return {std::move(out), residual};
}

Field dilate(const Field& u, int m) {
  if (m < 0) throw InvalidParameter("dilation exponent must be >= 0");
  const Lattice& lat = u.lattice();
  const int factor = 1 << m;
  Field out(lat);
  std::vector<int> k(lat.n);
  const auto coeffs = u.coeffs();
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    if (coeffs[flat] == Complex{}) continue;
    lat.decode(flat, k);
    for (auto& ki : k) {
      ki *= factor;
      if (std::abs(ki) > lat.K) throw BandlimitExceeded("dilated mode leaves the lattice");
    }
    out.set_coeff(k, coeffs[flat]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ColumnEvaluator

ColumnEvaluator::ColumnEvaluator(const Field& u, int M)
    : lattice_(u.lattice()), M_(M), columns_(ipow(static_cast<std::size_t>(M), u.lattice().n - 1)) {
  const Lattice& lat = lattice_;
  if (M < 2 * lat.K + 2) throw AliasingRisk("grid too coarse for column evaluation");
  const int side = lat.side();
  partial_.assign(columns_ * side, Complex{});
  const int h = lat.n - 1;
  std::vector<int> k(lat.n);
  // slabs[kn] holds the horizontal coefficients of vertical mode kn.
  std::vector<std::vector<Complex>> slabs(side);
  const auto coeffs = u.coeffs();
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    if (coeffs[flat] == Complex{}) continue;
    lat.decode(flat, k);
    auto& slab = slabs[k[h] + lat.K];
    if (slab.empty()) slab.assign(columns_, Complex{});
    std::size_t g = 0;
    for (int i = 0; i < h; ++i) g = g * M + wrap(k[i], M);
    slab[g] = coeffs[flat];
  }
  for (int idx = 0; idx < side; ++idx) {
    auto& slab = slabs[idx];
    if (slab.empty()) continue;
    if (h > 0) detail::fft_inplace(slab, h, M, FFTW_BACKWARD);
    for (std::size_t c = 0; c < columns_; ++c) partial_[c * side + idx] = slab[c];
  }
}

std::vector<Complex> ColumnEvaluator::row(double y) const {
  const int side = lattice_.side();
  std::vector<Complex> phase(side);
  for (int kn = -lattice_.K; kn <= lattice_.K; ++kn)
    phase[kn + lattice_.K] = std::polar(1.0, lattice_.freq_scale() * kn * y);
  std::vector<Complex> out(columns_);
  for (std::size_t c = 0; c < columns_; ++c) {
    const Complex* p = partial_.data() + c * side;
    Complex s{};
    for (int i = 0; i < side; ++i) s += p[i] * phase[i];
    out[c] = s;
  }
  return out;
}

}  // namespace fsx
