// SPDX-License-Identifier: Apache-2.0
#include "fsx/field_io.hpp"

#include <fstream>
#include <set>
#include <vector>

#include "fsx/error.hpp"

namespace fsx {

nlohmann::json field_to_json(const Field& u) {
  const Lattice& lat = u.lattice();
  nlohmann::json modes = nlohmann::json::array();
  std::vector<int> k(lat.n);
  const auto coeffs = u.coeffs();
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    if (std::abs(coeffs[flat]) < 1e-300) continue;
    lat.decode(flat, k);
    nlohmann::json row = nlohmann::json::array();
    for (int ki : k) row.push_back(ki);
    row.push_back(coeffs[flat].real());
    row.push_back(coeffs[flat].imag());
    modes.push_back(std::move(row));
  }
  return {{"n", lat.n}, {"K", lat.K}, {"L", lat.L}, {"modes", std::move(modes)}};
}

Field field_from_json(const nlohmann::json& j) {
  try {
    const Lattice lat = make_lattice(j.at("n").get<int>(), j.at("K").get<int>(), j.value("L", kTwoPi));
    Field u(lat);
    std::set<std::vector<int>> seen;
    std::vector<int> k(lat.n);
    for (const auto& row : j.at("modes")) {
      if (!row.is_array() || static_cast<int>(row.size()) != lat.n + 2)
        throw InvalidParameter("mode entry must have n + 2 numbers");
      for (int i = 0; i < lat.n; ++i) k[i] = row[i].get<int>();
      if (!lat.contains(k)) throw BandlimitExceeded("mode outside the declared bandlimit");
      if (!seen.insert(k).second) throw InvalidParameter("duplicate mode in field file");
      u.set_coeff(k, Complex{row[lat.n].get<double>(), row[lat.n + 1].get<double>()});
    }
    return u;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed field JSON: ") + e.what());
  }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j, int indent) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << j.dump(indent) << '\n';
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

Field read_field(const std::filesystem::path& path) { return field_from_json(read_json_file(path)); }

void write_field(const std::filesystem::path& path, const Field& u) { write_json_file(path, field_to_json(u)); }

}  // namespace fsx
