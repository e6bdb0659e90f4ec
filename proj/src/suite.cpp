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
#include "prc/suite.hpp"

#include "prc/circuit_io.hpp"
#include "prc/error.hpp"
#include "prc/hash.hpp"
#include "prc/parallel.hpp"

#include <algorithm>
#include <optional>

namespace prc {

using nlohmann::json;

namespace {

void check_grid(const SuiteOptions &o) {
    if (o.qubits.empty() || o.depths.empty()) {
        fail(Errc::InvalidArgument, "suite grid must be non-empty");
    }
    const int n_max = *std::max_element(o.qubits.begin(), o.qubits.end());
    const int d_max = *std::max_element(o.depths.begin(), o.depths.end());
    const int n_min = *std::min_element(o.qubits.begin(), o.qubits.end());
    const int d_min = *std::min_element(o.depths.begin(), o.depths.end());
    if (n_min < 2 || d_min < 2) {
        fail(Errc::InvalidDimension, "suite cells need n >= 2 and d >= 2");
    }
    if (n_max > o.reference_qubits || d_max > o.reference_depth) {
        fail(Errc::InvalidDimension, "suite grid exceeds the reference circuit (" +
                                         std::to_string(o.reference_qubits) + " x " +
                                         std::to_string(o.reference_depth) + ")");
    }
}

json summary_to_json(const OptimizationSummary &s) {
    return {{"initial", s.initial},
            {"final", s.final_value},
            {"stage1_iterations", s.stage1_iterations},
            {"stage2_iterations", s.stage2_iterations},
            {"converged", s.converged}};
}

OptimizationSummary summary_from_json(const json &j) {
    OptimizationSummary s;
    s.initial = j.at("initial").get<double>();
    s.final_value = j.at("final").get<double>();
    s.stage1_iterations = j.at("stage1_iterations").get<int>();
    s.stage2_iterations = j.at("stage2_iterations").get<int>();
    s.converged = j.at("converged").get<bool>();
    return s;
}

json manifest_of(const Suite &suite) {
    json cells = json::array();
    for (const auto &c : suite.cells) {
        cells.push_back({{"n", c.n},
                         {"d", c.d},
                         {"file", "cells/" + cell_stem(c.n, c.d) + ".json"},
                         {"hash", hex64(fnv1a64(cell_to_json(c).dump()))}});
    }
    return {{"format", "prc-suite"},
            {"version", kSuiteSchemaVersion},
            {"seed", suite.seed},
            {"reference", {{"qubits", suite.reference_qubits}, {"depth", suite.reference_depth}}},
            {"optimizer", suite.optimizer},
            {"cells", std::move(cells)}};
}

} // namespace

const SuiteCell *Suite::find(int n, int d) const {
    for (const auto &c : cells) {
        if (c.n == n && c.d == d) {
            return &c;
        }
    }
    return nullptr;
}

std::string Suite::hash() const { return hex64(fnv1a64(manifest_of(*this).dump())); }

std::uint64_t cell_seed(std::uint64_t suite_seed, int n, int d) {
    return derive_seed(suite_seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)});
}

std::string cell_stem(int n, int d) {
    return "prc_n" + std::to_string(n) + "_d" + std::to_string(d);
}

json optimizer_to_json(const OptimizerConfig &c) {
    return {{"stage1_iters", c.stage1_iters}, {"stage2_iters", c.stage2_iters},
            {"lbfgs_memory", c.lbfgs_memory}, {"adam_step", c.adam_step},
            {"adam_beta1", c.adam_beta1},     {"adam_beta2", c.adam_beta2},
            {"adam_eps", c.adam_eps},         {"stop_tol", c.stop_tol}};
}

OptimizerConfig optimizer_from_json(const json &doc) {
    OptimizerConfig c;
    try {
        c.stage1_iters = doc.value("stage1_iters", c.stage1_iters);
        c.stage2_iters = doc.value("stage2_iters", c.stage2_iters);
        c.lbfgs_memory = doc.value("lbfgs_memory", c.lbfgs_memory);
        c.adam_step = doc.value("adam_step", c.adam_step);
        c.adam_beta1 = doc.value("adam_beta1", c.adam_beta1);
        c.adam_beta2 = doc.value("adam_beta2", c.adam_beta2);
        c.adam_eps = doc.value("adam_eps", c.adam_eps);
        c.stop_tol = doc.value("stop_tol", c.stop_tol);
    } catch (const json::exception &e) {
        fail(Errc::Parse, std::string("optimizer config: ") + e.what());
    }
    c.validate();
    return c;
}

Suite generate_suite(const SuiteOptions &options) {
    check_grid(options);
    options.optimizer.validate();
    const Circuit reference =
        build_reference_circuit(options.reference_qubits, options.reference_depth, options.seed);

    Suite suite;
    suite.seed = options.seed;
    suite.reference_qubits = options.reference_qubits;
    suite.reference_depth = options.reference_depth;
    suite.optimizer = optimizer_to_json(options.optimizer);

    std::vector<int> qubits = options.qubits;
    std::vector<int> depths = options.depths;
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    std::sort(depths.begin(), depths.end());
    depths.erase(std::unique(depths.begin(), depths.end()), depths.end());

    std::vector<std::pair<int, int>> grid;
    for (int n : qubits) {
        for (int d : depths) {
            grid.emplace_back(n, d);
        }
    }
    // Larger cells first so the slowest optimizations start early.
    std::vector<std::size_t> order(grid.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = order.size() - 1 - i;
    }
    std::vector<std::optional<SuiteCell>> cells(grid.size());
    parallel_for(order.size(), options.jobs, [&](std::size_t k) {
        const std::size_t i = order[k];
        const auto [n, d] = grid[i];
        OptimizerConfig cfg = options.optimizer;
        cfg.seed = cell_seed(options.seed, n, d);
        const OptimizationResult r = optimize(derive_subcircuit(reference, n, d), cfg);
        SuiteCell cell;
        cell.n = n;
        cell.d = d;
        cell.circuit = r.circuit;
        cell.profile = peak_profile(r.circuit);
        cell.optimization = {r.trace.initial, r.trace.final_value, r.trace.stage1_iterations,
                             r.trace.stage2_iterations, r.trace.converged};
        cells[i] = std::move(cell);
    });
    for (auto &c : cells) {
        suite.cells.push_back(std::move(*c));
    }
    return suite;
}

json cell_to_json(const SuiteCell &cell) {
    return {{"format", "prc-cell"},
            {"version", kSuiteSchemaVersion},
            {"n", cell.n},
            {"d", cell.d},
            {"circuit", circuit_to_json(cell.circuit)},
            {"profile", profile_to_json(cell.profile)},
            {"optimization", summary_to_json(cell.optimization)}};
}

SuiteCell cell_from_json(const json &doc) {
    try {
        if (doc.value("format", std::string{}) != "prc-cell") {
            fail(Errc::Parse, "not a prc-cell document");
        }
        if (doc.at("version").get<int>() != kSuiteSchemaVersion) {
            fail(Errc::SchemaVersion, "unsupported cell schema version");
        }
        SuiteCell cell;
        cell.n = doc.at("n").get<int>();
        cell.d = doc.at("d").get<int>();
        cell.circuit = circuit_from_json(doc.at("circuit"));
        cell.profile = profile_from_json(doc.at("profile"));
        cell.optimization = summary_from_json(doc.at("optimization"));
        if (cell.circuit.num_qubits() != cell.n || cell.circuit.depth() != cell.d) {
            fail(Errc::Parse, "cell dimensions disagree with its circuit");
        }
        return cell;
    } catch (const json::exception &e) {
        fail(Errc::Parse, std::string("malformed cell document: ") + e.what());
    }
}

std::filesystem::path write_suite(const Suite &suite, const std::filesystem::path &dir) {
    for (const auto &c : suite.cells) {
        write_json_file(dir / "cells" / (cell_stem(c.n, c.d) + ".json"), cell_to_json(c));
    }
    const auto manifest = dir / "manifest.json";
    write_json_file(manifest, manifest_of(suite));
    return manifest;
}

Suite load_suite(const std::filesystem::path &manifest) {
    const json doc = read_json_file(manifest);
    try {
        if (doc.value("format", std::string{}) != "prc-suite") {
            fail(Errc::Parse, manifest.string() + ": not a prc-suite manifest");
        }
        const int version = doc.at("version").get<int>();
        if (version != kSuiteSchemaVersion) {
            fail(Errc::SchemaVersion, manifest.string() + ": suite schema version " +
                                          std::to_string(version) + " is not supported");
        }
        Suite suite;
        suite.seed = doc.at("seed").get<std::uint64_t>();
        suite.reference_qubits = doc.at("reference").at("qubits").get<int>();
        suite.reference_depth = doc.at("reference").at("depth").get<int>();
        suite.optimizer = doc.at("optimizer");
        const auto base = manifest.parent_path();
        for (const auto &entry : doc.at("cells")) {
            const int n = entry.at("n").get<int>();
            const int d = entry.at("d").get<int>();
            const auto path = base / entry.at("file").get<std::string>();
            if (!std::filesystem::exists(path)) {
                fail(Errc::MissingCircuit, "missing circuit for cell (n=" + std::to_string(n) +
                                               ", d=" + std::to_string(d) + "): " + path.string());
            }
            SuiteCell cell = cell_from_json(read_json_file(path));
            if (cell.n != n || cell.d != d) {
                fail(Errc::Parse, path.string() + ": cell dimensions disagree with the manifest");
            }
            if (hex64(fnv1a64(cell_to_json(cell).dump())) != entry.at("hash").get<std::string>()) {
                fail(Errc::Parse, path.string() + ": content hash does not match the manifest");
            }
            suite.cells.push_back(std::move(cell));
        }
        std::sort(suite.cells.begin(), suite.cells.end(), [](const auto &a, const auto &b) {
            return a.n != b.n ? a.n < b.n : a.d < b.d;
        });
        return suite;
    } catch (const json::exception &e) {
        fail(Errc::Parse, manifest.string() + ": " + e.what());
    }
}

} // namespace prc
