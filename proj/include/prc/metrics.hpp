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
 * Peak Identification, Relative Peakedness and Fidelity Error.
 */
#pragma once

#include "prc/bitstring.hpp"
#include "prc/statevector.hpp"

namespace prc {

struct RunMetrics {
    bool identified = false;
    double p_hat_peak = 0.0;   // frequency of the target
    double p_hat_second = 0.0; // largest non-target frequency
    double c_exp = 0.0;
    double f_raw = 0.0; // 1 - c_exp / c_max
    double f = 0.0;     // f_raw clamped to [0, 1]

    friend bool operator==(const RunMetrics &, const RunMetrics &) = default;
};

/// Strict: the target count must exceed every other count.
bool identify(const ShotHistogram &hist, const BitString &target);

double relative_peakedness(const ShotHistogram &hist, const BitString &target);

/// Raw 1 - c_exp / c_max. Throws Errc::InvalidArgument when c_max <= 0.
double fidelity_error(double c_exp, double c_max);

double clamp_unit(double x);

/// All metrics of one sampled run.
RunMetrics run_metrics(const ShotHistogram &hist, const BitString &target, double c_max);

/// Infinite-shot metrics, read off an exact distribution.
RunMetrics run_metrics(const ProbabilityDistribution &dist, const BitString &target, double c_max);

} // namespace prc
