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
 * Peaking-half optimization: limited-memory BFGS followed by Adam, both
 * driven by the adjoint gradient of the target probability.
 */
#pragma once

#include "prc/circuit.hpp"

#include <cstdint>
#include <vector>

namespace prc {

struct OptimizerConfig {
    int stage1_iters = 5000;
    int stage2_iters = 10000;
    int lbfgs_memory = 10;
    double adam_step = 1e-3;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    double stop_tol = 1e-6; // on the gradient 2-norm
    std::uint64_t seed = 0;

    /// Throws Errc::InvalidArgument on negative budgets or a non-positive step.
    void validate() const;
};

struct OptimizationTrace {
    /// Objective after each accepted iteration, starting with the initial value.
    std::vector<double> values;
    /// Running maximum of values.
    std::vector<double> best_so_far;
    double initial = 0.0;
    double final_value = 0.0;
    int stage1_iterations = 0;
    int stage2_iterations = 0;
    bool converged = false; // gradient norm fell below stop_tol
    double wall_seconds = 0.0;
};

/// |<target|C|0^n>|^2.
double objective(const Circuit &circuit);

struct OptimizationResult {
    Circuit circuit;
    OptimizationTrace trace;
};

/// Maximizes objective() over the peaking-half structural parameters and
/// returns the best point visited. Random-half gates are never touched.
/// Throws Errc::NothingToOptimize when the peaking half has no gates.
OptimizationResult optimize(const Circuit &circuit, const OptimizerConfig &config);

} // namespace prc
