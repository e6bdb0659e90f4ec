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
 * Simulated-device noise: coherent entangling-angle errors, global
 * depolarizing mixing, and readout bit flips, applied in that order.
 */
#pragma once

#include "prc/circuit.hpp"
#include "prc/rng.hpp"
#include "prc/statevector.hpp"

#include <nlohmann/json.hpp>

namespace prc {

struct NoiseSpec {
    double p1 = 0.0;       // per standalone single-qubit gate
    double p2 = 0.0;       // per two-qubit gate
    double readout = 0.0;  // per-bit flip probability
    double coherent = 0.0; // relative spread of entangling angles

    /// Throws Errc::InvalidArgument for probabilities outside [0, 1] or a
    /// negative coherent spread.
    void validate() const;
    [[nodiscard]] bool noiseless() const {
        return p1 == 0.0 && p2 == 0.0 && readout == 0.0 && coherent == 0.0;
    }

    friend bool operator==(const NoiseSpec &, const NoiseSpec &) = default;
};

nlohmann::json noise_to_json(const NoiseSpec &spec);
NoiseSpec noise_from_json(const nlohmann::json &doc);

/// (1 - p1)^(standalone X count) * (1 - p2)^(two-qubit gate count).
double effective_fidelity(const Circuit &circuit, double p1, double p2);

/// f p + (1 - f) / 2^n.
ProbabilityDistribution depolarize(const ProbabilityDistribution &dist, double f);

/// Flips every bit of every recorded shot independently with probability eps.
ShotHistogram readout_flip(const ShotHistogram &hist, double eps, Rng &rng);

/// Exact readout channel on a distribution (the infinite-shot limit of readout_flip).
ProbabilityDistribution readout_flip_exact(const ProbabilityDistribution &dist, double eps);

/// Scales each gate's (xx, yy, zz) by independent factors 1 + delta * N(0, 1).
Circuit perturb_coherent(const Circuit &circuit, double delta, Rng &rng);

} // namespace prc
