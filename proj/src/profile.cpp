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
#include "prc/profile.hpp"

#include "prc/error.hpp"
#include "prc/statevector.hpp"

#include <cmath>
#include <limits>

namespace prc {

double c_max_from_dominance(double r_p) {
    if (std::isinf(r_p)) {
        return 1.0;
    }
    return (r_p - 1.0) / (r_p + 1.0);
}

PeakProfile profile_of(const std::vector<double> &probs, const BitString &target) {
    if (probs.size() != (std::size_t{1} << target.size())) {
        fail(Errc::InvalidArgument, "distribution size does not match target width");
    }
    std::size_t best = 0;
    std::size_t second = probs.size() > 1 ? 1 : 0;
    if (probs.size() > 1 && probs[1] > probs[0]) {
        std::swap(best, second);
    }
    for (std::size_t i = 2; i < probs.size(); ++i) {
        if (probs[i] > probs[best]) {
            second = best;
            best = i;
        } else if (probs[i] > probs[second]) {
            second = i;
        }
    }
    PeakProfile out;
    out.target = target;
    out.argmax = BitString(target.size(), best);
    out.p_target = probs[target.index()];
    out.p_peak = probs[best];
    out.p_second = probs.size() > 1 ? probs[second] : 0.0;
    if (out.p_second > 0.0) {
        out.r_p = out.p_peak / out.p_second;
        out.c_max = (out.p_peak - out.p_second) / (out.p_peak + out.p_second);
    } else {
        out.r_p = std::numeric_limits<double>::infinity();
        out.c_max = 1.0;
    }
    out.target_mismatch = best != target.index();
    return out;
}

PeakProfile peak_profile(const Circuit &circuit) {
    return profile_of(full_distribution(circuit).probs, circuit.target());
}

nlohmann::json profile_to_json(const PeakProfile &profile) {
    nlohmann::json r_p = nullptr;
    if (std::isfinite(profile.r_p)) {
        r_p = profile.r_p;
    }
    return {{"target", profile.target.str()},
            {"argmax", profile.argmax.str()},
            {"p_target", profile.p_target},
            {"p_peak", profile.p_peak},
            {"p_second", profile.p_second},
            {"r_p", r_p},
            {"c_max", profile.c_max},
            {"target_mismatch", profile.target_mismatch}};
}

PeakProfile profile_from_json(const nlohmann::json &doc) {
    try {
        PeakProfile p;
        p.target = BitString::parse(doc.at("target").get<std::string>());
        p.argmax = BitString::parse(doc.at("argmax").get<std::string>());
        p.p_target = doc.at("p_target").get<double>();
        p.p_peak = doc.at("p_peak").get<double>();
        p.p_second = doc.at("p_second").get<double>();
        p.r_p = doc.at("r_p").is_null() ? std::numeric_limits<double>::infinity()
                                        : doc.at("r_p").get<double>();
        p.c_max = doc.at("c_max").get<double>();
        p.target_mismatch = doc.at("target_mismatch").get<bool>();
        return p;
    } catch (const nlohmann::json::exception &e) {
        fail(Errc::Parse, std::string("malformed peak profile: ") + e.what());
    }
}

} // namespace prc
