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
 * Circuit-intrinsic peak statistics from the exact output distribution.
 */
#pragma once

#include "prc/circuit.hpp"

#include <nlohmann/json.hpp>

namespace prc {

struct PeakProfile {
    BitString target;
    BitString argmax;
    double p_target = 0.0;
    double p_peak = 0.0;
    double p_second = 0.0;
    double r_p = 0.0; // +inf when p_second == 0
    double c_max = 0.0;
    bool target_mismatch = false;

    friend bool operator==(const PeakProfile &, const PeakProfile &) = default;
};

/// (r - 1) / (r + 1); 1 for r = +inf.
double c_max_from_dominance(double r_p);

/// Profile of an explicit probability vector indexed by basis state.
PeakProfile profile_of(const std::vector<double> &probs, const BitString &target);

PeakProfile peak_profile(const Circuit &circuit);

nlohmann::json profile_to_json(const PeakProfile &profile);
PeakProfile profile_from_json(const nlohmann::json &doc);

} // namespace prc
