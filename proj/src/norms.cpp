// SPDX-License-Identifier: Apache-2.0
#include "fsx/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "fsx/error.hpp"
#include "fsx/multipliers.hpp"

namespace fsx {

double quadrature_weight(const SampleGrid& g, std::size_t flat, Domain domain) {
  if (domain == Domain::whole) return 1.0;
  const int iv = g.vertical_index(flat);
  if (iv == 0 || iv == g.M / 2) return 0.5;
  return iv < g.M / 2 ? 1.0 : 0.0;
}

namespace {

int grid_for(const Lattice& lat, Quadrature quad) { return quad.M > 0 ? quad.M : default_grid_size(lat.K); }

double cell_volume(const SampleGrid& g) { return std::pow(g.lattice.L / g.M, g.lattice.n); }

// L^p functional of a nonnegative sample array.
double lp_of_magnitudes(const SampleGrid& g, const std::vector<double>& mag, double p, Domain domain) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < mag.size(); ++i)
      if (quadrature_weight(g, i, domain) > 0.0) m = std::max(m, mag[i]);
    return m;
  }
  double peak = 0.0;
  for (std::size_t i = 0; i < mag.size(); ++i)
    if (quadrature_weight(g, i, domain) > 0.0) peak = std::max(peak, mag[i]);
  if (peak == 0.0) return 0.0;
  // Scale by the peak so large p does not overflow.
  double sum = 0.0;
  for (std::size_t i = 0; i < mag.size(); ++i)
    if (const double w = quadrature_weight(g, i, domain); w > 0.0) sum += w * std::pow(mag[i] / peak, p);
  return peak * std::pow(sum * cell_volume(g), 1.0 / p);
}

double seq_lq(const std::vector<double>& a, double q) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (double v : a) m = std::max(m, v);
    return m;
  }
  double peak = 0.0;
  for (double v : a) peak = std::max(peak, v);
  if (peak == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : a) sum += std::pow(v / peak, q);
  return peak * std::pow(sum, 1.0 / q);
}

void require_zero_mean(const Field& u, const char* what) {
  if (!u.is_homogeneous_admissible())
    throw HomogeneousDCViolation(std::string(what) + " requires a zero-mean field");
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

double parse_real(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty number");
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + t + "'");
  }
  if (pos != t.size()) throw ConfigError("trailing characters in number: '" + t + "'");
  return v;
}

}  // namespace

void check_exponent(double p) {
  if (std::isnan(p) || p < 1.0) throw InvalidExponent("exponent must lie in [1, inf], got " + std::to_string(p));
}

double parse_exponent(std::string_view text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "infinity" || t == "Inf") return kInf;
  if (auto slash = t.find('/'); slash != std::string::npos) {
    const double num = parse_real(std::string_view(t).substr(0, slash));
    const double den = parse_real(std::string_view(t).substr(slash + 1));
    if (den == 0.0) throw ConfigError("zero denominator in '" + t + "'");
    return num / den;
  }
  return parse_real(t);
}

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::whole: return "whole";
    case Domain::halfspace: return "halfspace";
    case Domain::halfspace_zero: return "halfspace_zero";
  }
  return "whole";
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Lp: return "Lp";
    case Family::Hdot: return "Hdot";
    case Family::H: return "H";
    case Family::Bdot: return "Bdot";
    case Family::B: return "B";
    case Family::Fdot: return "Fdot";
  }
  return "Lp";
}

Domain parse_domain(std::string_view text) {
  const std::string t = trim(text);
  if (t == "whole") return Domain::whole;
  if (t == "halfspace") return Domain::halfspace;
  if (t == "halfspace_zero") return Domain::halfspace_zero;
  throw ConfigError("unknown domain '" + t + "'");
}

SpaceSpec parse_space_spec(std::string_view text, Domain domain) {
  SpaceSpec spec;
  spec.domain = domain;
  const auto colon = text.find(':');
  const std::string fam = trim(text.substr(0, colon));
  if (fam == "Lp") spec.family = Family::Lp;
  else if (fam == "Hdot") spec.family = Family::Hdot;
  else if (fam == "H") spec.family = Family::H;
  else if (fam == "Bdot") spec.family = Family::Bdot;
  else if (fam == "B") spec.family = Family::B;
  else if (fam == "Fdot") spec.family = Family::Fdot;
  else throw ConfigError("unknown space family '" + fam + "'");
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value in space spec, got '" + item + "'");
    const std::string key = trim(std::string_view(item).substr(0, eq));
    const std::string_view value = std::string_view(item).substr(eq + 1);
    if (key == "s") spec.s = parse_real(value);
    else if (key == "p") spec.p = parse_exponent(value);
    else if (key == "q") spec.q = parse_exponent(value);
    else throw ConfigError("unknown space parameter '" + key + "'");
  }
  check_exponent(spec.p);
  check_exponent(spec.q);
  return spec;
}

std::string format_space_spec(const SpaceSpec& spec) {
  auto num = [](double v) {
    if (std::isinf(v)) return std::string("inf");
    std::ostringstream os;
    os << v;
    return os.str();
  };
  std::string out(to_string(spec.family));
  out += ':';
  if (spec.family != Family::Lp) out += "s=" + num(spec.s) + ",";
  out += "p=" + num(spec.p);
  if (spec.family == Family::Bdot || spec.family == Family::B) out += ",q=" + num(spec.q);
  return out;
}

double lp_norm_samples(const SampleGrid& samples, double p, Domain domain) {
  check_exponent(p);
  std::vector<double> mag(samples.values.size());
  for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(samples.values[i]);
  return lp_of_magnitudes(samples, mag, p, domain);
}

double lp_norm(const Field& u, double p, Domain domain, Quadrature quad) {
  check_exponent(p);
  if (p == 2.0 && domain == Domain::whole) {
    // Parseval: exact for trigonometric polynomials.
    return std::sqrt(std::pow(u.lattice().L, u.lattice().n)) * u.l2_coeff_norm();
  }
  return lp_norm_samples(sample_grid(u, grid_for(u.lattice(), quad)), p, domain);
}

double besov_norm(const Field& u, const SpaceSpec& spec, Quadrature quad) {
  check_exponent(spec.p);
  check_exponent(spec.q);
  const DyadicFamily fam = build_dyadic_family(u.lattice());
  std::vector<double> terms;
  if (spec.family == Family::Bdot) {
    require_zero_mean(u, "homogeneous Besov norm");
    for (int j = fam.j_min; j <= fam.j_max; ++j)
      terms.push_back(std::pow(2.0, j * spec.s) *
                      lp_norm(delta_dot(u, j, fam), spec.p, spec.domain, quad));
  } else if (spec.family == Family::B) {
    for (int k = -1; k <= fam.j_max; ++k)
      terms.push_back(std::pow(2.0, k * spec.s) * lp_norm(delta_inhom(u, k, fam), spec.p, spec.domain, quad));
  } else {
    throw InvalidParameter("besov_norm needs family Bdot or B");
  }
  return seq_lq(terms, spec.q);
}

double sobolev_norm(const Field& u, const SpaceSpec& spec, Quadrature quad) {
  check_exponent(spec.p);
  if (spec.family == Family::Hdot) {
    require_zero_mean(u, "homogeneous Sobolev norm");
    return lp_norm(fractional_laplacian(u, spec.s), spec.p, spec.domain, quad);
  }
  if (spec.family == Family::H) return lp_norm(bessel_potential(u, spec.s), spec.p, spec.domain, quad);
  throw InvalidParameter("sobolev_norm needs family Hdot or H");
}

double triebel_norm(const Field& u, double s, double p, Domain domain, Quadrature quad) {
  check_exponent(p);
  require_zero_mean(u, "Triebel-Lizorkin norm");
  const DyadicFamily fam = build_dyadic_family(u.lattice());
  const int M = grid_for(u.lattice(), quad);
  std::vector<double> acc;
  SampleGrid shape;
  for (int j = fam.j_min; j <= fam.j_max; ++j) {
    const Field block = delta_dot(u, j, fam);
    if (block.is_zero()) continue;
    SampleGrid g = sample_grid(block, M);
    const double w = std::pow(2.0, j * s);
    if (acc.empty()) acc.assign(g.values.size(), 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += std::norm(w * g.values[i]);
    if (shape.M == 0) shape = SampleGrid{g.lattice, g.M, {}};
  }
  if (acc.empty()) return 0.0;
  for (auto& a : acc) a = std::sqrt(a);
  return lp_of_magnitudes(shape, acc, p, domain);
}

double seq_norm(const WeightedSeq& a, double s, double q) {
  check_exponent(q);
  std::vector<double> terms;
  for (const auto& [j, v] : a.entries) terms.push_back(std::pow(2.0, j * s) * v);
  return seq_lq(terms, q);
}

double space_norm(const Field& u, const SpaceSpec& spec, Quadrature quad) {
  switch (spec.family) {
    case Family::Lp: return lp_norm(u, spec.p, spec.domain, quad);
    case Family::Hdot:
    case Family::H: return sobolev_norm(u, spec, quad);
    case Family::Bdot:
    case Family::B: return besov_norm(u, spec, quad);
    case Family::Fdot: return triebel_norm(u, spec.s, spec.p, spec.domain, quad);
  }
  throw InvalidParameter("unknown family");
}

double dilated_cell_norm(const Field& u, int m, const SpaceSpec& spec, Quadrature quad) {
  if (spec.domain != Domain::whole) throw InvalidParameter("dilated_cell_norm works on the whole torus");
  if (m < 0) throw InvalidParameter("dilation exponent must be >= 0");
  // The 2^{mn} period cells carry equal shares of the L^p integral.
  const double cells = std::ldexp(1.0, m * u.lattice().n);
  const double torus = space_norm(dilate(u, m), spec, quad);
  return std::isinf(spec.p) ? torus : torus * std::pow(cells, -1.0 / spec.p);
}

Complex pairing(const Field& u, const Field& v, Domain domain, Quadrature quad) {
  if (!(u.lattice() == v.lattice())) throw InvalidParameter("pairing needs fields on the same lattice");
  const Lattice& lat = u.lattice();
  if (domain != Domain::whole) {
    const int M = grid_for(lat, quad);
    const SampleGrid a = sample_grid(u, M);
    const SampleGrid b = sample_grid(v, M);
    Complex sum{};
    for (std::size_t i = 0; i < a.values.size(); ++i)
      if (const double w = quadrature_weight(a, i, domain); w > 0.0) sum += w * a.values[i] * b.values[i];
    return sum * cell_volume(a);
  }
  require_zero_mean(u, "pairing");
  require_zero_mean(v, "pairing");
  const DyadicFamily fam = build_dyadic_family(lat);
  std::map<int, Field> bu, bv;
  for (int j = fam.j_min; j <= fam.j_max; ++j) {
    bu.emplace(j, delta_dot(u, j, fam));
    bv.emplace(j, delta_dot(v, j, fam));
  }
  // <a, b> = L^n sum_k a_k b_{-k}; mode -k sits at the mirrored flat index.
  const double volume = std::pow(lat.L, lat.n);
  const std::size_t count = lat.mode_count();
  Complex total{};
  for (int j = fam.j_min; j <= fam.j_max; ++j) {
    const auto a = bu.at(j).coeffs();
    for (int jp = std::max(fam.j_min, j - 1); jp <= std::min(fam.j_max, j + 1); ++jp) {
      const auto b = bv.at(jp).coeffs();
      Complex s{};
      for (std::size_t i = 0; i < count; ++i) s += a[i] * b[count - 1 - i];
      total += s;
    }
  }
  return total * volume;
}

}  // namespace fsx
