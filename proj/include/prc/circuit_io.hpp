// Copyright 2026 The PRC Bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "prc/circuit.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace prc {

inline constexpr int kCircuitSchemaVersion = 1;

/// Versioned interchange document:
/// {format, version, n, d, random_depth, target, final_flips,
///  layers: [[{layer, qubit_low, role, params[16]}]]}
nlohmann::json circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const nlohmann::json &doc);

/// Parses a JSON file, mapping syntax errors to Errc::Parse with the path.
nlohmann::json read_json_file(const std::filesystem::path &path);
/// Writes `doc` with a two-space indent and a trailing newline.
void write_json_file(const std::filesystem::path &path, const nlohmann::json &doc);
void write_text_file(const std::filesystem::path &path, const std::string &text);

} // namespace prc
