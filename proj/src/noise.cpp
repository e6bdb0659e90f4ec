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
#include "prc/noise.hpp"

#include "prc/error.hpp"

#include <cmath>

namespace prc {

namespace {

void check_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        fail(Errc::InvalidArgument, std::string(name) + " must lie in [0, 1]");
    }
}

} // namespace

void NoiseSpec::validate() const {
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    check_probability(readout, "readout");
    if (!(coherent >= 0.0) || !std::isfinite(coherent)) {
        fail(Errc::InvalidArgument, "coherent must be a finite non-negative number");
    }
}

nlohmann::json noise_to_json(const NoiseSpec &spec) {
    return {{"p1", spec.p1}, {"p2", spec.p2}, {"readout", spec.readout}, {"coherent", spec.coherent}};
}

NoiseSpec noise_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        fail(Errc::Parse, "noise must be an object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (key != "p1" && key != "p2" && key != "readout" && key != "coherent") {
            fail(Errc::Parse, "unknown noise field '" + key + "'");
        }
        if (!value.is_number()) {
            fail(Errc::Parse, "noise field '" + key + "' must be a number");
        }
    }
    NoiseSpec spec;
    spec.p1 = doc.value("p1", 0.0);
    spec.p2 = doc.value("p2", 0.0);
    spec.readout = doc.value("readout", 0.0);
    spec.coherent = doc.value("coherent", 0.0);
    spec.validate();
    return spec;
}

double effective_fidelity(const Circuit &circuit, double p1, double p2) {
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    return std::pow(1.0 - p1, static_cast<double>(circuit.final_flips().size())) *
           std::pow(1.0 - p2, static_cast<double>(circuit.num_gates()));
}

ProbabilityDistribution depolarize(const ProbabilityDistribution &dist, double f) {
    check_probability(f, "fidelity");
    ProbabilityDistribution out = dist;
    const double floor = (1.0 - f) / static_cast<double>(dist.probs.size());
    for (auto &p : out.probs) {
        p = f * p + floor;
    }
    return out;
}

ShotHistogram readout_flip(const ShotHistogram &hist, double eps, Rng &rng) {
    check_probability(eps, "readout");
    if (eps == 0.0) {
        return hist;
    }
    const std::uint64_t all = hist.num_qubits >= 64 ? ~std::uint64_t{0}
                                                    : (std::uint64_t{1} << hist.num_qubits) - 1;
    ShotHistogram out{hist.num_qubits, hist.shots, {}};
    if (eps == 1.0) {
        for (const auto &[index, count] : hist.counts) {
            out.counts[index ^ all] += count;
        }
        return out;
    }
    std::bernoulli_distribution flip(eps);
    for (const auto &[index, count] : hist.counts) {
        for (std::uint64_t s = 0; s < count; ++s) {
            std::uint64_t mask = 0;
            for (int q = 0; q < hist.num_qubits; ++q) {
                if (flip(rng)) {
                    mask |= std::uint64_t{1} << q;
                }
            }
            ++out.counts[index ^ mask];
        }
    }
    return out;
}

ProbabilityDistribution readout_flip_exact(const ProbabilityDistribution &dist, double eps) {
    check_probability(eps, "readout");
    ProbabilityDistribution out = dist;
    if (eps == 0.0) {
        return out;
    }
    for (int q = 0; q < dist.num_qubits; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t i = 0; i < out.probs.size(); ++i) {
            if ((i & bit) != 0) {
                continue;
            }
            const double a = out.probs[i];
            const double b = out.probs[i | bit];
            out.probs[i] = (1.0 - eps) * a + eps * b;
            out.probs[i | bit] = (1.0 - eps) * b + eps * a;
        }
    }
    return out;
}

Circuit perturb_coherent(const Circuit &circuit, double delta, Rng &rng) {
    if (!(delta >= 0.0)) {
        fail(Errc::InvalidArgument, "coherent spread must be non-negative");
    }
    if (delta == 0.0) {
        return circuit;
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    return circuit.map_gates([&](const GatePlacement &g) {
        GateParams p = g.params;
        p.xx *= 1.0 + delta * normal(rng);
        p.yy *= 1.0 + delta * normal(rng);
        p.zz *= 1.0 + delta * normal(rng);
        return p;
    });
}

} // namespace prc
