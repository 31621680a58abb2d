// SPDX-License-Identifier: Apache-2.0
#include "fsx/corpus.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <memory>
#include <random>
#include <set>

#include <openssl/evp.h>

#include "fsx/error.hpp"

namespace fsx {

namespace {

std::vector<int> with_vertical(std::span<const int> kh, int kn, int n) {
  if (static_cast<int>(kh.size()) != n - 1) throw InvalidParameter("horizontal mode needs n - 1 entries");
  std::vector<int> k(kh.begin(), kh.end());
  k.push_back(kn);
  return k;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) throw IoError("SHA-256 init failed");
  }
  void update(const void* data, std::size_t len) { EVP_DigestUpdate(ctx_.get(), data, len); }
  void update_double(double v) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
    update(b, 8);
  }
  void update_field(const Field& u) {
    const Lattice& lat = u.lattice();
    update_double(lat.n);
    update_double(lat.K);
    update_double(lat.L);
    for (const Complex& c : u.coeffs()) {
      update_double(c.real());
      update_double(c.imag());
    }
  }
  std::string hex() {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), md, &len);
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out += digits[md[i] >> 4];
      out += digits[md[i] & 15];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, void (*)(EVP_MD_CTX*)> ctx_;
};

double decay_weight(std::span<const int> k, double decay) {
  double r2 = 0.0;
  for (int ki : k) r2 += static_cast<double>(ki) * ki;
  return std::pow(1.0 + std::sqrt(r2), -decay);
}

}  // namespace

Field sine_mode(const Lattice& lat, std::span<const int> kh, int m, Complex amp) {
  Field u(lat);
  if (m == 0) return u;
  const Complex half = amp / Complex{0.0, 2.0};
  u.set_coeff(with_vertical(kh, m, lat.n), half);
  u.set_coeff(with_vertical(kh, -m, lat.n), u.coeff(with_vertical(kh, -m, lat.n)) - half);
  return u;
}

Field cosine_mode(const Lattice& lat, std::span<const int> kh, int m, Complex amp) {
  Field u(lat);
  if (m == 0) {
    u.set_coeff(with_vertical(kh, 0, lat.n), amp);
    return u;
  }
  u.set_coeff(with_vertical(kh, m, lat.n), 0.5 * amp);
  u.set_coeff(with_vertical(kh, -m, lat.n), 0.5 * amp);
  return u;
}

Field strip_bump(const Lattice& lat, double center, std::span<const int> kh, int N, Complex amp) {
  if (N < 1 || N > lat.K) throw BandlimitExceeded("bump order must lie in [1, K]");
  Field u(lat);
  // cos^{2N}(z/2) = 4^{-N} sum_r C(2N, N + r) e^{i r z}.
  long double binom = 1.0L;  // C(2N, 0)
  std::vector<long double> row(2 * N + 1);
  for (int r = 0; r <= 2 * N; ++r) {
    row[r] = binom;
    binom = binom * (2 * N - r) / (r + 1);
  }
  const double scale = std::ldexp(1.0, -2 * N);
  for (int r = -N; r <= N; ++r) {
    const double phase = -kTwoPi * r * center / lat.L;
    const double mag = static_cast<double>(row[N + r]) * scale;
    u.set_coeff(with_vertical(kh, r, lat.n), amp * mag * Complex{std::cos(phase), std::sin(phase)});
  }
  return u;
}

CorpusKind parse_corpus_kind(std::string_view text) {
  if (text == "random_bandlimited") return CorpusKind::random_bandlimited;
  if (text == "sine_strip") return CorpusKind::sine_strip;
  if (text == "cosine_strip") return CorpusKind::cosine_strip;
  if (text == "boundary_bump") return CorpusKind::boundary_bump;
  if (text == "plane_waves") return CorpusKind::plane_waves;
  throw ConfigError("unknown corpus kind '" + std::string(text) + "'");
}

std::string_view to_string(CorpusKind k) {
  switch (k) {
    case CorpusKind::random_bandlimited: return "random_bandlimited";
    case CorpusKind::sine_strip: return "sine_strip";
    case CorpusKind::cosine_strip: return "cosine_strip";
    case CorpusKind::boundary_bump: return "boundary_bump";
    case CorpusKind::plane_waves: return "plane_waves";
  }
  return "?";
}

HalfField Corpus::half(std::size_t i) const { return make_half_field(fields.at(i)); }

std::string Corpus::digest() const {
  Sha256 h;
  for (const Field& u : fields) h.update_field(u);
  return h.hex();
}

std::string field_digest(const Field& u) {
  Sha256 h;
  h.update_field(u);
  return h.hex();
}

std::string fields_digest(std::span<const Field> fields) {
  Sha256 h;
  for (const Field& u : fields) h.update_field(u);
  return h.hex();
}

std::string text_digest(std::string_view text) {
  Sha256 h;
  h.update(text.data(), text.size());
  return h.hex();
}

Corpus generate_corpus(std::uint64_t seed, CorpusKind kind, int size, const Lattice& lat, const CorpusOptions& opt) {
  if (size < 1) throw InvalidParameter("corpus size must be >= 1");
  const bool strip = kind == CorpusKind::sine_strip || kind == CorpusKind::cosine_strip || kind == CorpusKind::boundary_bump;
  if (strip && lat.n < 2) throw InvalidParameter("strip corpora need n >= 2");
  Corpus c{seed, kind, lat, {}, {}};
  std::set<std::size_t> used_waves;
  for (int i = 0; i < size; ++i) {
    std::mt19937_64 rng(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(kind) << 40 | static_cast<std::uint64_t>(i))));
    std::normal_distribution<double> normal;
    auto gauss = [&] { return Complex{normal(rng), normal(rng)}; };
    Field u(lat);
    std::vector<int> k(lat.n);
    std::vector<int> kh(lat.n - 1);
    switch (kind) {
      case CorpusKind::random_bandlimited:
        for (std::size_t f = 0; f < u.coeffs().size(); ++f) {
          lat.decode(f, k);
          u.coeffs()[f] = gauss() * decay_weight(k, opt.decay);
        }
        if (opt.zero_dc) u.coeffs()[lat.mode_count() / 2] = 0.0;
        break;
      case CorpusKind::sine_strip:
      case CorpusKind::cosine_strip: {
        std::uniform_int_distribution<int> hpick(-lat.K / 2, lat.K / 2);
        std::uniform_int_distribution<int> vpick(kind == CorpusKind::sine_strip ? 1 : 0, lat.K / 2);
        for (int t = 0; t < opt.terms; ++t) {
          for (auto& v : kh) v = hpick(rng);
          const int m = vpick(rng);
          bool all_zero = m == 0;
          for (int v : kh) all_zero = all_zero && v == 0;
          if (all_zero && opt.zero_dc) kh[0] = 1;
          k.assign(kh.begin(), kh.end());
          k.push_back(m);
          const Complex a = gauss() * decay_weight(k, opt.decay);
          u += kind == CorpusKind::sine_strip ? sine_mode(lat, kh, m, a) : cosine_mode(lat, kh, m, a);
        }
        break;
      }
      case CorpusKind::boundary_bump: {
        std::uniform_int_distribution<int> hpick(1, std::max(1, lat.K / 4));
        std::bernoulli_distribution flip;
        for (int t = 0; t < 2; ++t) {
          for (auto& v : kh) v = flip(rng) ? hpick(rng) : -hpick(rng);
          u += strip_bump(lat, lat.L / 8.0, kh, lat.K, gauss());
        }
        break;
      }
      case CorpusKind::plane_waves: {
        std::uniform_int_distribution<int> pick(-lat.K, lat.K);
        std::size_t flat = 0;
        do {
          for (auto& v : k) v = pick(rng);
          flat = lat.encode(k);
        } while (flat == lat.mode_count() / 2 || used_waves.count(flat) != 0);
        used_waves.insert(flat);
        u.coeffs()[flat] = 1.0;
        break;
      }
    }
    if (strip) c.leakage.push_back(make_half_field(u).leakage);
    c.fields.push_back(std::move(u));
  }
  return c;
}

}  // namespace fsx
