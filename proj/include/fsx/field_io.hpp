// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>

#include <json.hpp>

#include "fsx/lattice.hpp"

namespace fsx {

/// {"n": int, "K": int, "L": float, "modes": [[k_1, ..., k_n, re, im], ...]}.
/// Modes with |c| < 1e-300 are omitted; they are written in lattice order.
nlohmann::json field_to_json(const Field& u);

/// Accepts modes in any order; duplicate or out-of-band modes are errors.
Field field_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j, int indent = 1);

Field read_field(const std::filesystem::path& path);
void write_field(const std::filesystem::path& path, const Field& u);

}  // namespace fsx
