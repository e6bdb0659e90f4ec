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
#include "prc/harness.hpp"

#include "prc/circuit_io.hpp"
#include "prc/error.hpp"
#include "prc/parallel.hpp"
#include "prc/range.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace prc {

using nlohmann::json;

namespace {

std::vector<OutcomeFrequency> top_of(const ShotHistogram &hist, int k) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries(hist.counts.begin(),
                                                                 hist.counts.end());
    const auto keep = std::min(entries.size(), static_cast<std::size_t>(std::max(k, 0)));
    std::partial_sort(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(keep),
                      entries.end(), [](const auto &a, const auto &b) {
                          return a.second != b.second ? a.second > b.second : a.first < b.first;
                      });
    std::vector<OutcomeFrequency> out;
    for (std::size_t i = 0; i < keep; ++i) {
        out.push_back({BitString(hist.num_qubits, entries[i].first).str(),
                       static_cast<double>(entries[i].second) / static_cast<double>(hist.shots)});
    }
    return out;
}

std::vector<OutcomeFrequency> top_of(const ProbabilityDistribution &dist, int k) {
    std::vector<std::uint64_t> order(dist.probs.size());
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    const auto keep = std::min(order.size(), static_cast<std::size_t>(std::max(k, 0)));
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                      [&](std::uint64_t a, std::uint64_t b) {
                          return dist.probs[a] != dist.probs[b] ? dist.probs[a] > dist.probs[b]
                                                                : a < b;
                      });
    std::vector<OutcomeFrequency> out;
    for (std::size_t i = 0; i < keep; ++i) {
        out.push_back({BitString(dist.num_qubits, order[i]).str(), dist.probs[order[i]]});
    }
    return out;
}

ProbabilityDistribution noisy_distribution(const Circuit &circuit, const NoiseSpec &noise,
                                           Rng &rng) {
    const Circuit actual = perturb_coherent(circuit, noise.coherent, rng);
    return depolarize(full_distribution(actual), effective_fidelity(actual, noise.p1, noise.p2));
}

std::vector<int> int_list(const json &value, const char *key) {
    if (value.is_string()) {
        return parse_int_range(value.get<std::string>());
    }
    if (value.is_array()) {
        return value.get<std::vector<int>>();
    }
    fail(Errc::Parse, std::string(key) + " must be an array or an \"a..b\" range");
}

std::string backend_name(BackendKind kind) {
    switch (kind) {
    case BackendKind::Sampled:
        return "sampled";
    case BackendKind::Exact:
        return "exact";
    case BackendKind::AlwaysFail:
        return "always-fail";
    }
    return "sampled";
}

BackendKind backend_from_name(const std::string &name) {
    if (name == "sampled") {
        return BackendKind::Sampled;
    }
    if (name == "exact") {
        return BackendKind::Exact;
    }
    if (name == "always-fail") {
        return BackendKind::AlwaysFail;
    }
    fail(Errc::Parse, "unknown backend '" + name + "'");
}

void check_keys(const json &doc, const std::set<std::string> &allowed, const std::string &where) {
    if (!doc.is_object()) {
        fail(Errc::Parse, where + " must be an object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (allowed.count(key) == 0) {
            fail(Errc::Parse, "unknown key '" + key + "' in " + where);
        }
    }
}

json metrics_to_json(const RunMetrics &m) {
    return {{"identified", m.identified}, {"p_hat_peak", m.p_hat_peak},
            {"p_hat_second", m.p_hat_second}, {"c_exp", m.c_exp},
            {"f", m.f}, {"f_raw", m.f_raw}};
}

RunMetrics metrics_from_json(const json &j) {
    RunMetrics m;
    m.identified = j.at("identified").get<bool>();
    m.p_hat_peak = j.at("p_hat_peak").get<double>();
    m.p_hat_second = j.at("p_hat_second").get<double>();
    m.c_exp = j.at("c_exp").get<double>();
    m.f = j.at("f").get<double>();
    m.f_raw = j.at("f_raw").get<double>();
    return m;
}

json optional_number(const std::optional<double> &v) {
    return v ? json(*v) : json(nullptr);
}

std::optional<double> optional_from(const json &j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<double>();
}

std::size_t grid_index(const std::vector<int> &qubits, const std::vector<int> &depths, int n,
                       int d) {
    const auto row = std::find(qubits.begin(), qubits.end(), n);
    const auto col = std::find(depths.begin(), depths.end(), d);
    if (row == qubits.end() || col == depths.end()) {
        fail(Errc::InvalidArgument,
             "cell (" + std::to_string(n) + ", " + std::to_string(d) + ") is not in the matrix");
    }
    return static_cast<std::size_t>(row - qubits.begin()) * depths.size() +
           static_cast<std::size_t>(col - depths.begin());
}

} // namespace

std::uint64_t ShotPolicy::shots(int n, int d) const {
    if (fixed != 0) {
        return fixed;
    }
    const double raw = base * std::exp2(n / 2.0) * (1.0 + d / 25.0);
    const double lo = static_cast<double>(min_shots);
    const double hi = static_cast<double>(max_shots);
    return static_cast<std::uint64_t>(std::ceil(std::clamp(raw, lo, hi)));
}

BenchConfig BenchConfig::defaults() {
    BenchConfig c;
    c.qubits = parse_int_range("2..20");
    c.depths = parse_int_range("2..50");
    return c;
}

void BenchConfig::validate() const {
    auto fail_config = [](const std::string &msg) { fail(Errc::InvalidArgument, msg); };
    if (qubits.empty() || depths.empty()) {
        fail_config("qubit and depth lists must be non-empty");
    }
    for (int n : qubits) {
        if (n < 2) {
            fail_config("qubit counts must be at least 2");
        }
    }
    for (int d : depths) {
        if (d < 2) {
            fail_config("depths must be at least 2");
        }
    }
    if (!std::is_sorted(depths.begin(), depths.end()) ||
        std::adjacent_find(depths.begin(), depths.end()) != depths.end() ||
        !std::is_sorted(qubits.begin(), qubits.end()) ||
        std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
        fail_config("qubit and depth lists must be strictly increasing");
    }
    if (reps < 1) {
        fail_config("reps must be at least 1");
    }
    if (threshold < 1 || threshold > reps) {
        fail_config("threshold must lie in [1, reps]");
    }
    if (skip_window < 1) {
        fail_config("skip_window must be at least 1");
    }
    if (top_k < 1) {
        fail_config("top_k must be at least 1");
    }
    if (shot_policy.fixed == 0 &&
        (shot_policy.min_shots < 1 || shot_policy.max_shots < shot_policy.min_shots ||
         !(shot_policy.base > 0.0))) {
        fail_config("shot policy needs base > 0 and 1 <= min <= max");
    }
    noise.validate();
}

json bench_config_to_json(const BenchConfig &c) {
    json shots;
    if (c.shot_policy.fixed != 0) {
        shots = {{"fixed", c.shot_policy.fixed}};
    } else {
        shots = {{"base", c.shot_policy.base},
                 {"min", c.shot_policy.min_shots},
                 {"max", c.shot_policy.max_shots}};
    }
    return {{"qubits", c.qubits},
            {"depths", c.depths},
            {"reps", c.reps},
            {"threshold", c.threshold},
            {"skip_window", c.skip_window},
            {"shots", shots},
            {"noise", noise_to_json(c.noise)},
            {"seed", c.master_seed},
            {"top_k", c.top_k},
            {"backend", backend_name(c.backend)},
            {"deterministic", c.deterministic}};
}

namespace {

template <typename T> T field(const json &doc, const char *key, T fallback) {
    if (!doc.contains(key)) {
        return fallback;
    }
    try {
        return doc[key].get<T>();
    } catch (const json::exception &) {
        fail(Errc::Parse, std::string("bench config: field '") + key + "' has the wrong type");
    }
}

} // namespace

BenchConfig bench_config_from_json(const json &doc) {
    check_keys(doc,
               {"qubits", "depths", "reps", "threshold", "skip_window", "shots", "noise", "seed",
                "top_k", "backend", "deterministic", "description"},
               "bench config");
    BenchConfig c = BenchConfig::defaults();
    try {
        if (doc.contains("qubits")) {
            c.qubits = int_list(doc["qubits"], "qubits");
        }
        if (doc.contains("depths")) {
            c.depths = int_list(doc["depths"], "depths");
        }
        c.reps = field(doc, "reps", c.reps);
        c.threshold = field(doc, "threshold", c.threshold);
        c.skip_window = field(doc, "skip_window", c.skip_window);
        if (doc.contains("shots")) {
            const json &s = doc["shots"];
            check_keys(s, {"fixed", "base", "min", "max"}, "shots");
            if (s.contains("fixed")) {
                c.shot_policy.fixed = s["fixed"].get<std::uint64_t>();
                if (c.shot_policy.fixed == 0) {
                    fail(Errc::Parse, "shots.fixed must be positive");
                }
            }
            c.shot_policy.base = field(s, "base", c.shot_policy.base);
            c.shot_policy.min_shots = field(s, "min", c.shot_policy.min_shots);
            c.shot_policy.max_shots = field(s, "max", c.shot_policy.max_shots);
        }
        if (doc.contains("noise")) {
            c.noise = noise_from_json(doc["noise"]);
        }
        c.master_seed = field(doc, "seed", c.master_seed);
        c.top_k = field(doc, "top_k", c.top_k);
        if (doc.contains("backend")) {
            c.backend = backend_from_name(doc["backend"].get<std::string>());
        }
        c.deterministic = field(doc, "deterministic", c.deterministic);
    } catch (const json::exception &e) {
        fail(Errc::Parse, std::string("bench config: ") + e.what());
    }
    try {
        c.validate();
    } catch (const Error &e) {
        fail(Errc::Parse, std::string("bench config: ") + e.what());
    }
    return c;
}

std::uint64_t record_seed(std::uint64_t master, int n, int d, int rep) {
    return derive_seed(master, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d),
                                static_cast<std::uint64_t>(rep)});
}

BackendRun SimulatedBackend::execute(const Circuit &circuit, const PeakProfile &profile,
                                     std::uint64_t shots, std::uint64_t seed) const {
    Rng rng(seed);
    const ProbabilityDistribution dist = noisy_distribution(circuit, noise_, rng);
    const ShotHistogram hist = readout_flip(sample(dist, shots, rng), noise_.readout, rng);
    return {run_metrics(hist, circuit.target(), profile.c_max), top_of(hist, top_k_)};
}

BackendRun ExactBackend::execute(const Circuit &circuit, const PeakProfile &profile,
                                 std::uint64_t /*shots*/, std::uint64_t seed) const {
    Rng rng(seed);
    const ProbabilityDistribution dist =
        readout_flip_exact(noisy_distribution(circuit, noise_, rng), noise_.readout);
    return {run_metrics(dist, circuit.target(), profile.c_max), top_of(dist, top_k_)};
}

BackendRun AlwaysFailBackend::execute(const Circuit &circuit, const PeakProfile &profile,
                                      std::uint64_t shots, std::uint64_t /*seed*/) const {
    // Every shot lands on the complement of the target.
    const int n = circuit.num_qubits();
    const BitString miss = circuit.target() ^ BitString::ones(n);
    ShotHistogram hist{n, std::max<std::uint64_t>(shots, 1), {}};
    hist.counts[miss.index()] = hist.shots;
    return {run_metrics(hist, circuit.target(), profile.c_max), top_of(hist, 1)};
}

std::unique_ptr<Backend> make_backend(const BenchConfig &config) {
    switch (config.backend) {
    case BackendKind::Sampled:
        return std::make_unique<SimulatedBackend>(config.noise, config.top_k);
    case BackendKind::Exact:
        return std::make_unique<ExactBackend>(config.noise, config.top_k);
    case BackendKind::AlwaysFail:
        return std::make_unique<AlwaysFailBackend>();
    }
    fail(Errc::InvalidArgument, "unknown backend");
}

CellResult run_cell(const Circuit &circuit, const PeakProfile &profile, const Backend &backend,
                    const BenchConfig &config) {
    if (!(profile.target == circuit.target())) {
        fail(Errc::DomainMismatch, "profile target " + profile.target.str() +
                                       " does not match circuit target " +
                                       circuit.target().str());
    }
    const int n = circuit.num_qubits();
    const int d = circuit.depth();
    CellResult cell;
    cell.n = n;
    cell.d = d;
    cell.shots = backend.infinite_shots() ? 0 : config.shot_policy.shots(n, d);
    double sum_f = 0.0;
    double sum_f_raw = 0.0;
    for (int rep = 0; rep < config.reps; ++rep) {
        RunRecord rec;
        rec.n = n;
        rec.d = d;
        rec.rep = rep;
        rec.seed = record_seed(config.master_seed, n, d, rep);
        rec.shots = cell.shots;
        const auto start = std::chrono::steady_clock::now();
        BackendRun out = backend.execute(circuit, profile, cell.shots, rec.seed);
        rec.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rec.metrics = out.metrics;
        rec.top = std::move(out.top);
        if (rec.metrics.identified) {
            ++cell.identified_reps;
            sum_f += rec.metrics.f;
            sum_f_raw += rec.metrics.f_raw;
        }
        cell.runs.push_back(std::move(rec));
    }
    if (cell.identified_reps > 0) {
        cell.mean_f = sum_f / cell.identified_reps;
        cell.mean_f_raw = sum_f_raw / cell.identified_reps;
    }
    cell.status = cell.identified_reps >= config.threshold ? CellStatus::Identified
                                                           : CellStatus::NonIdentified;
    return cell;
}

BenchmarkMatrix run_matrix(const Suite &suite, const BenchConfig &config, const Backend &backend,
                           int jobs) {
    config.validate();
    for (int n : config.qubits) {
        for (int d : config.depths) {
            if (suite.find(n, d) == nullptr) {
                fail(Errc::MissingCircuit, "suite has no circuit for cell (n=" +
                                               std::to_string(n) + ", d=" + std::to_string(d) +
                                               ")");
            }
        }
    }
    BenchmarkMatrix m;
    m.config = bench_config_to_json(config);
    m.suite_hash = suite.hash();
    m.qubits = config.qubits;
    m.depths = config.depths;
    m.cells.resize(config.qubits.size() * config.depths.size());

    parallel_for(config.qubits.size(), jobs, [&](std::size_t row) {
        const int n = config.qubits[row];
        int consecutive_misses = 0;
        for (std::size_t col = 0; col < config.depths.size(); ++col) {
            const int d = config.depths[col];
            CellResult &slot = m.cells[row * config.depths.size() + col];
            if (consecutive_misses >= config.skip_window) {
                slot.n = n;
                slot.d = d;
                slot.status = CellStatus::Skipped;
                continue;
            }
            const SuiteCell *cell = suite.find(n, d);
            slot = run_cell(cell->circuit, cell->profile, backend, config);
            if (slot.status == CellStatus::Identified) {
                consecutive_misses = 0;
            } else {
                ++consecutive_misses;
            }
        }
    });
    return m;
}

std::string to_string(CellStatus status) {
    switch (status) {
    case CellStatus::Identified:
        return "identified";
    case CellStatus::NonIdentified:
        return "non_identified";
    case CellStatus::Skipped:
        return "skipped";
    }
    return "skipped";
}

CellStatus cell_status_from_string(const std::string &text) {
    if (text == "identified") {
        return CellStatus::Identified;
    }
    if (text == "non_identified") {
        return CellStatus::NonIdentified;
    }
    if (text == "skipped") {
        return CellStatus::Skipped;
    }
    fail(Errc::Parse, "unknown cell status '" + text + "'");
}

const CellResult &BenchmarkMatrix::at(int n, int d) const {
    return cells[grid_index(qubits, depths, n, d)];
}

CellResult &BenchmarkMatrix::at(int n, int d) { return cells[grid_index(qubits, depths, n, d)]; }

json matrix_to_json(const BenchmarkMatrix &matrix, bool deterministic) {
    json cells = json::array();
    for (const auto &c : matrix.cells) {
        json runs = json::array();
        for (const auto &r : c.runs) {
            json top = json::array();
            for (const auto &t : r.top) {
                top.push_back({t.bits, t.frequency});
            }
            json jr = {{"rep", r.rep},         {"seed", r.seed}, {"shots", r.shots},
                       {"metrics", metrics_to_json(r.metrics)}, {"top", top}};
            if (!deterministic) {
                jr["wall_seconds"] = r.wall_seconds;
            }
            runs.push_back(std::move(jr));
        }
        cells.push_back({{"n", c.n},
                         {"d", c.d},
                         {"status", to_string(c.status)},
                         {"identified_reps", c.identified_reps},
                         {"shots", c.shots},
                         {"mean_f", optional_number(c.mean_f)},
                         {"mean_f_raw", optional_number(c.mean_f_raw)},
                         {"runs", std::move(runs)}});
    }
    return {{"format", "prc-matrix"},  {"version", kMatrixSchemaVersion},
            {"config", matrix.config}, {"suite_hash", matrix.suite_hash},
            {"qubits", matrix.qubits}, {"depths", matrix.depths},
            {"cells", std::move(cells)}};
}

BenchmarkMatrix matrix_from_json(const json &doc) {
    try {
        if (doc.value("format", std::string{}) != "prc-matrix") {
            fail(Errc::Parse, "not a prc-matrix document");
        }
        const int version = doc.at("version").get<int>();
        if (version != kMatrixSchemaVersion) {
            fail(Errc::SchemaVersion, "matrix schema version " + std::to_string(version) +
                                          " is not supported (expected " +
                                          std::to_string(kMatrixSchemaVersion) + ")");
        }
        BenchmarkMatrix m;
        m.config = doc.at("config");
        m.suite_hash = doc.at("suite_hash").get<std::string>();
        m.qubits = doc.at("qubits").get<std::vector<int>>();
        m.depths = doc.at("depths").get<std::vector<int>>();
        for (const auto &jc : doc.at("cells")) {
            CellResult c;
            c.n = jc.at("n").get<int>();
            c.d = jc.at("d").get<int>();
            c.status = cell_status_from_string(jc.at("status").get<std::string>());
            c.identified_reps = jc.at("identified_reps").get<int>();
            c.shots = jc.at("shots").get<std::uint64_t>();
            c.mean_f = optional_from(jc.at("mean_f"));
            c.mean_f_raw = optional_from(jc.at("mean_f_raw"));
            for (const auto &jr : jc.at("runs")) {
                RunRecord r;
                r.n = c.n;
                r.d = c.d;
                r.rep = jr.at("rep").get<int>();
                r.seed = jr.at("seed").get<std::uint64_t>();
                r.shots = jr.at("shots").get<std::uint64_t>();
                r.metrics = metrics_from_json(jr.at("metrics"));
                for (const auto &t : jr.at("top")) {
                    r.top.push_back({t.at(0).get<std::string>(), t.at(1).get<double>()});
                }
                r.wall_seconds = jr.value("wall_seconds", 0.0);
                c.runs.push_back(std::move(r));
            }
            m.cells.push_back(std::move(c));
        }
        if (m.cells.size() != m.qubits.size() * m.depths.size()) {
            fail(Errc::Parse, "matrix cell count does not match its grid");
        }
        for (std::size_t i = 0; i < m.cells.size(); ++i) {
            if (m.cells[i].n != m.qubits[i / m.depths.size()] ||
                m.cells[i].d != m.depths[i % m.depths.size()]) {
                fail(Errc::Parse, "matrix cells are not in grid order");
            }
        }
        return m;
    } catch (const json::exception &e) {
        fail(Errc::Parse, std::string("malformed matrix document: ") + e.what());
    }
}

void persist(const BenchmarkMatrix &matrix, const std::filesystem::path &path,
             bool deterministic) {
    write_json_file(path, matrix_to_json(matrix, deterministic));
}

BenchmarkMatrix load_matrix(const std::filesystem::path &path) {
    try {
        return matrix_from_json(read_json_file(path));
    } catch (const Error &e) {
        if (e.code() == Errc::Parse && std::string(e.what()).find(path.string()) == std::string::npos) {
            fail(Errc::Parse, path.string() + ": " + e.what());
        }
        throw;
    }
}

std::string matrix_csv(const BenchmarkMatrix &matrix) {
    std::ostringstream os;
    os.precision(17);
    os << "n,d,status,identified_reps,mean_f,shots\n";
    for (const auto &c : matrix.cells) {
        os << c.n << ',' << c.d << ',' << to_string(c.status) << ',' << c.identified_reps << ',';
        if (c.mean_f) {
            os << *c.mean_f;
        }
        os << ',' << c.shots << '\n';
    }
    return os.str();
}

} // namespace prc
