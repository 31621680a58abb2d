// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsx/halfspace.hpp"
#include "fsx/lattice.hpp"

namespace fsx {

/// sin(2 pi m x_n / L) e^{i xi'.x'} with horizontal mode kh (length n-1).
Field sine_mode(const Lattice& lat, std::span<const int> kh, int m, Complex amp = 1.0);
/// cos(2 pi m x_n / L) e^{i xi'.x'}.
Field cosine_mode(const Lattice& lat, std::span<const int> kh, int m, Complex amp = 1.0);

/// cos^{2N}(pi (x_n - center) / L) e^{i xi'.x'}: exactly band-limited in x_n
/// with |k_n| <= N, width about L sqrt(2/N) / pi. Requires N <= K.
Field strip_bump(const Lattice& lat, double center, std::span<const int> kh, int N, Complex amp = 1.0);

enum class CorpusKind { random_bandlimited, sine_strip, cosine_strip, boundary_bump, plane_waves };

CorpusKind parse_corpus_kind(std::string_view text);
std::string_view to_string(CorpusKind k);

struct CorpusOptions {
  double decay = 2.0;  // |c_k| ~ (1 + |k|)^{-decay}
  bool zero_dc = true;
  int terms = 4;       // modes per strip-series field
};

struct Corpus {
  std::uint64_t seed = 0;
  CorpusKind kind = CorpusKind::random_bandlimited;
  Lattice lattice;
  std::vector<Field> fields;
  /// Far-face leakage per field for the strip kinds, empty otherwise.
  std::vector<double> leakage;

  std::size_t size() const { return fields.size(); }
  HalfField half(std::size_t i) const;
  /// SHA-256 over the little-endian mode data of every field, hex encoded.
  std::string digest() const;
};

/// Deterministic in (seed, kind, size, lattice, options). Each field is drawn
/// from its own generator seeded by (seed, kind, index); plane waves are
/// redrawn on collision with an earlier index.
Corpus generate_corpus(std::uint64_t seed, CorpusKind kind, int size, const Lattice& lat, const CorpusOptions& opt = {});

/// SHA-256 of the field's canonical mode bytes.
std::string field_digest(const Field& u);
std::string fields_digest(std::span<const Field> fields);
std::string text_digest(std::string_view text);

}  // namespace fsx
