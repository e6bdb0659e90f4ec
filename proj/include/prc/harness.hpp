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
 * The benchmark protocol: repeated runs per cell, shot policy, adaptive
 * skipping along each qubit row, and aggregation.
 */
#pragma once

#include "prc/matrix.hpp"
#include "prc/noise.hpp"
#include "prc/profile.hpp"
#include "prc/suite.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace prc {

struct ShotPolicy {
    double base = 250.0;
    std::uint64_t min_shots = 200;
    std::uint64_t max_shots = 1000000;
    std::uint64_t fixed = 0; // non-zero overrides the formula

    /// clamp(base * 2^(n/2) * (1 + d/25), min, max), or the fixed count.
    [[nodiscard]] std::uint64_t shots(int n, int d) const;

    friend bool operator==(const ShotPolicy &, const ShotPolicy &) = default;
};

enum class BackendKind { Sampled, Exact, AlwaysFail };

struct BenchConfig {
    std::vector<int> qubits;
    std::vector<int> depths;
    int reps = 5;
    int threshold = 3;
    int skip_window = 5;
    ShotPolicy shot_policy;
    NoiseSpec noise;
    std::uint64_t master_seed = 0;
    int top_k = 8;
    BackendKind backend = BackendKind::Sampled;
    bool deterministic = true;

    /// Qubits 2..20, depths 2..50.
    static BenchConfig defaults();

    /// Throws Errc::InvalidArgument on inconsistent settings.
    void validate() const;
};

nlohmann::json bench_config_to_json(const BenchConfig &config);
/// Missing keys take defaults(); unknown keys and bad types are Errc::Parse.
BenchConfig bench_config_from_json(const nlohmann::json &doc);

/// Seed of run (n, d, rep); a pure function of its arguments.
std::uint64_t record_seed(std::uint64_t master, int n, int d, int rep);

struct BackendRun {
    RunMetrics metrics;
    std::vector<OutcomeFrequency> top;
};

class Backend {
  public:
    virtual ~Backend() = default;
    virtual BackendRun execute(const Circuit &circuit, const PeakProfile &profile,
                               std::uint64_t shots, std::uint64_t seed) const = 0;
    [[nodiscard]] virtual bool infinite_shots() const { return false; }
};

/// Coherent perturbation, then sampling from the depolarized distribution,
/// then per-shot readout flips.
class SimulatedBackend : public Backend {
  public:
    SimulatedBackend(NoiseSpec noise, int top_k) : noise_(noise), top_k_(top_k) {}
    BackendRun execute(const Circuit &circuit, const PeakProfile &profile, std::uint64_t shots,
                       std::uint64_t seed) const override;

  private:
    NoiseSpec noise_;
    int top_k_;
};

/// The same channels in the infinite-shot limit; metrics come from the
/// noisy distribution itself.
class ExactBackend : public Backend {
  public:
    ExactBackend(NoiseSpec noise, int top_k) : noise_(noise), top_k_(top_k) {}
    BackendRun execute(const Circuit &circuit, const PeakProfile &profile, std::uint64_t shots,
                       std::uint64_t seed) const override;
    [[nodiscard]] bool infinite_shots() const override { return true; }

  private:
    NoiseSpec noise_;
    int top_k_;
};

/// Never recovers the peak. Protocol testing only.
class AlwaysFailBackend : public Backend {
  public:
    BackendRun execute(const Circuit &circuit, const PeakProfile &profile, std::uint64_t shots,
                       std::uint64_t seed) const override;
};

std::unique_ptr<Backend> make_backend(const BenchConfig &config);

CellResult run_cell(const Circuit &circuit, const PeakProfile &profile, const Backend &backend,
                    const BenchConfig &config);

/// Rows (qubit counts) run in parallel on up to `jobs` threads; the result
/// does not depend on jobs.
BenchmarkMatrix run_matrix(const Suite &suite, const BenchConfig &config, const Backend &backend,
                           int jobs = 1);

} // namespace prc
