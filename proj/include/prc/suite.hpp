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
 * Benchmark suites: every (n, d) cell derived from one reference circuit,
 * optimized, profiled, and persisted next to a manifest.
 */
#pragma once

#include "prc/circuit.hpp"
#include "prc/optimizer.hpp"
#include "prc/profile.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace prc {

inline constexpr int kSuiteSchemaVersion = 1;

struct SuiteOptions {
    std::vector<int> qubits;
    std::vector<int> depths;
    std::uint64_t seed = 42;
    int reference_qubits = 20;
    int reference_depth = 50;
    OptimizerConfig optimizer;
    int jobs = 1;
};

struct OptimizationSummary {
    double initial = 0.0;
    double final_value = 0.0;
    int stage1_iterations = 0;
    int stage2_iterations = 0;
    bool converged = false;

    friend bool operator==(const OptimizationSummary &, const OptimizationSummary &) = default;
};

struct SuiteCell {
    int n = 0;
    int d = 0;
    Circuit circuit = Circuit::empty(2, 2);
    PeakProfile profile;
    OptimizationSummary optimization;
};

struct Suite {
    std::uint64_t seed = 0;
    int reference_qubits = 0;
    int reference_depth = 0;
    nlohmann::json optimizer; // configuration snapshot
    std::vector<SuiteCell> cells; // sorted by (n, d)

    /// nullptr when the cell is absent.
    [[nodiscard]] const SuiteCell *find(int n, int d) const;
    /// Provenance hash over the manifest and every cell document.
    [[nodiscard]] std::string hash() const;
};

/// Seed of the optimizer for cell (n, d).
std::uint64_t cell_seed(std::uint64_t suite_seed, int n, int d);

/// Canonical file stem "prc_n{n}_d{d}".
std::string cell_stem(int n, int d);

Suite generate_suite(const SuiteOptions &options);

nlohmann::json cell_to_json(const SuiteCell &cell);
SuiteCell cell_from_json(const nlohmann::json &doc);

/// Writes cells/<stem>.json per cell and manifest.json; returns the manifest path.
std::filesystem::path write_suite(const Suite &suite, const std::filesystem::path &dir);

/// Throws Errc::MissingCircuit naming the cell when a listed file is absent.
Suite load_suite(const std::filesystem::path &manifest);

nlohmann::json optimizer_to_json(const OptimizerConfig &config);
OptimizerConfig optimizer_from_json(const nlohmann::json &doc);

} // namespace prc
