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
/**
 * @file
 * Benchmark-matrix records and their JSON / CSV forms.
 */
#pragma once

#include "prc/metrics.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prc {

inline constexpr int kMatrixSchemaVersion = 1;

enum class CellStatus { Identified, NonIdentified, Skipped };

std::string to_string(CellStatus status);
CellStatus cell_status_from_string(const std::string &text);

struct OutcomeFrequency {
    std::string bits;
    double frequency = 0.0;

    friend bool operator==(const OutcomeFrequency &, const OutcomeFrequency &) = default;
};

struct RunRecord {
    int n = 0;
    int d = 0;
    int rep = 0;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0; // 0 for the infinite-shot backend
    RunMetrics metrics;
    std::vector<OutcomeFrequency> top; // most frequent outcomes, descending
    double wall_seconds = 0.0;

    friend bool operator==(const RunRecord &, const RunRecord &) = default;
};

struct CellResult {
    int n = 0;
    int d = 0;
    CellStatus status = CellStatus::Skipped;
    int identified_reps = 0;
    std::uint64_t shots = 0;
    /// Means over identified reps only; absent when none were identified.
    std::optional<double> mean_f;
    std::optional<double> mean_f_raw;
    std::vector<RunRecord> runs;

    friend bool operator==(const CellResult &, const CellResult &) = default;
};

struct BenchmarkMatrix {
    nlohmann::json config; // snapshot of the configuration that produced it
    std::string suite_hash;
    std::vector<int> qubits;
    std::vector<int> depths;
    std::vector<CellResult> cells; // row-major: qubits outer, depths inner

    [[nodiscard]] const CellResult &at(int n, int d) const;
    [[nodiscard]] CellResult &at(int n, int d);

    friend bool operator==(const BenchmarkMatrix &, const BenchmarkMatrix &) = default;
};

/// deterministic = true drops wall-clock fields.
nlohmann::json matrix_to_json(const BenchmarkMatrix &matrix, bool deterministic = true);
BenchmarkMatrix matrix_from_json(const nlohmann::json &doc);

void persist(const BenchmarkMatrix &matrix, const std::filesystem::path &path,
             bool deterministic = true);
BenchmarkMatrix load_matrix(const std::filesystem::path &path);

/// Columns n,d,status,identified_reps,mean_f,shots.
std::string matrix_csv(const BenchmarkMatrix &matrix);

/// Grid of F_a - F_b over cells identified in both; absent elsewhere.
struct DeltaGrid {
    std::vector<int> qubits;
    std::vector<int> depths;
    std::vector<std::optional<double>> values; // row-major like BenchmarkMatrix::cells

    [[nodiscard]] std::optional<double> at(int n, int d) const;
};

DeltaGrid delta_matrix(const BenchmarkMatrix &a, const BenchmarkMatrix &b);

std::string delta_csv(const DeltaGrid &grid);

} // namespace prc
