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

#include "prc/circuit_io.hpp"

#include "prc/error.hpp"

#include <fstream>
#include <sstream>

namespace prc {

using nlohmann::json;

json circuit_to_json(const Circuit &circuit) {
    json layers = json::array();
    for (const auto &layer : circuit.layers()) {
        json gates = json::array();
        for (const auto &g : layer) {
            const auto values = g.params.to_array();
            gates.push_back({{"layer", g.layer},
                             {"qubit_low", g.qubit_low},
                             {"role", g.role == Role::Random ? "random" : "peaking"},
                             {"params", std::vector<double>(values.begin(), values.end())}});
        }
        layers.push_back(std::move(gates));
    }
    return {{"format", "prc-circuit"},
            {"version", kCircuitSchemaVersion},
            {"n", circuit.num_qubits()},
            {"d", circuit.depth()},
            {"random_depth", circuit.random_depth()},
            {"target", circuit.target().str()},
            {"final_flips", circuit.final_flips()},
            {"layers", std::move(layers)}};
}

Circuit circuit_from_json(const json &doc) {
    try {
        if (doc.value("format", std::string{}) != "prc-circuit") {
            fail(Errc::Parse, "not a prc-circuit document");
        }
        const int version = doc.at("version").get<int>();
        if (version != kCircuitSchemaVersion) {
            fail(Errc::SchemaVersion, "circuit schema version " + std::to_string(version) +
                                          " is not supported (expected " +
                                          std::to_string(kCircuitSchemaVersion) + ")");
        }
        const int n = doc.at("n").get<int>();
        const int d = doc.at("d").get<int>();
        if (doc.at("random_depth").get<int>() != random_depth_for(d)) {
            fail(Errc::Parse, "random_depth inconsistent with d");
        }
        std::vector<Layer> layers;
        for (const auto &jl : doc.at("layers")) {
            Layer layer;
            for (const auto &jg : jl) {
                const auto role = jg.at("role").get<std::string>();
                if (role != "random" && role != "peaking") {
                    fail(Errc::Parse, "unknown gate role '" + role + "'");
                }
                const auto params = jg.at("params").get<std::vector<double>>();
                if (params.size() != GateParams::kSerialized) {
                    fail(Errc::Parse, "gate params must have 16 entries");
                }
                layer.push_back({jg.at("layer").get<int>(), jg.at("qubit_low").get<int>(),
                                 role == "random" ? Role::Random : Role::Peaking,
                                 GateParams::from_array(params)});
            }
            layers.push_back(std::move(layer));
        }
        const auto target = BitString::parse(doc.at("target").get<std::string>());
        return {n, d, std::move(layers), target,
                doc.value("final_flips", std::vector<int>{})};
    } catch (const json::exception &e) {
        fail(Errc::Parse, std::string("malformed circuit document: ") + e.what());
    }
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        fail(Errc::Io, "cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        fail(Errc::Parse, path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(Errc::Io, "cannot write " + path.string());
    }
    out << text;
}

void write_json_file(const std::filesystem::path &path, const json &doc) {
    write_text_file(path, doc.dump(2) + "\n");
}

} // namespace prc
