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
// prc: generate suites, run benchmark matrices, render reports, export QASM.
// Exit status: 0 success, 1 runtime failure, 2 usage or configuration error.

#include "prc/circuit_io.hpp"
#include "prc/error.hpp"
#include "prc/harness.hpp"
#include "prc/qasm.hpp"
#include "prc/range.hpp"
#include "prc/report.hpp"
#include "prc/suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace prc;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

fs::path output_root() {
    const char *env = std::getenv("PRC_OUT_DIR");
    return (env != nullptr && *env != '\0') ? fs::path(env) : fs::path("prc_out");
}

std::vector<int> parse_range_flag(const std::string &text, const char *flag) {
    try {
        return parse_int_range(text);
    } catch (const Error &e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// ---- generate ----

struct GenerateArgs {
    std::string qubits;
    std::string depths;
    std::uint64_t seed = 42;
    std::string out;
    int jobs = 1;
    int reference_qubits = 20;
    int reference_depth = 50;
    int stage1_iters = OptimizerConfig{}.stage1_iters;
    int stage2_iters = OptimizerConfig{}.stage2_iters;
    double stop_tol = OptimizerConfig{}.stop_tol;
};

int run_generate(const GenerateArgs &a) {
    SuiteOptions o;
    o.qubits = parse_range_flag(a.qubits, "--qubits");
    o.depths = parse_range_flag(a.depths, "--depths");
    for (int n : o.qubits) {
        if (n < 2) {
            throw UsageError("--qubits: every qubit count must be at least 2");
        }
    }
    for (int d : o.depths) {
        if (d < 2) {
            throw UsageError("--depths: every depth must be at least 2");
        }
    }
    o.seed = a.seed;
    o.jobs = a.jobs;
    o.reference_qubits = a.reference_qubits;
    o.reference_depth = a.reference_depth;
    o.optimizer.stage1_iters = a.stage1_iters;
    o.optimizer.stage2_iters = a.stage2_iters;
    o.optimizer.stop_tol = a.stop_tol;
    const fs::path out = a.out.empty() ? output_root() / "suite" : fs::path(a.out);
    const Suite suite = generate_suite(o);
    const fs::path manifest = write_suite(suite, out);
    for (const auto &c : suite.cells) {
        std::cout << "n=" << c.n << " d=" << c.d << " p_target=" << fixed(c.profile.p_target, 6)
                  << " c_max=" << fixed(c.profile.c_max, 6)
                  << " iterations=" << c.optimization.stage1_iterations << "+"
                  << c.optimization.stage2_iterations << "\n";
    }
    std::cout << "wrote " << suite.cells.size() << " cells, manifest " << manifest.string() << "\n";
    return 0;
}

// ---- bench ----

struct BenchArgs {
    std::string suite;
    std::string config;
    std::string out;
    int jobs = 1;
};

BenchConfig load_config(const std::string &path, const Suite &suite) {
    BenchConfig cfg = BenchConfig::defaults();
    nlohmann::json doc = nlohmann::json::object();
    if (!path.empty()) {
        doc = read_json_file(path);
        if (!doc.is_object()) {
            fail(Errc::Parse, path + ": configuration must be a JSON object");
        }
        cfg = bench_config_from_json(doc);
    }
    // Grids not named in the configuration follow the suite.
    if (!doc.contains("qubits") || !doc.contains("depths")) {
        std::vector<int> qubits;
        std::vector<int> depths;
        for (const auto &c : suite.cells) {
            if (std::find(qubits.begin(), qubits.end(), c.n) == qubits.end()) {
                qubits.push_back(c.n);
            }
            if (std::find(depths.begin(), depths.end(), c.d) == depths.end()) {
                depths.push_back(c.d);
            }
        }
        std::sort(qubits.begin(), qubits.end());
        std::sort(depths.begin(), depths.end());
        if (!doc.contains("qubits")) {
            cfg.qubits = qubits;
        }
        if (!doc.contains("depths")) {
            cfg.depths = depths;
        }
    }
    cfg.validate();
    return cfg;
}

int run_bench(const BenchArgs &a) {
    const Suite suite = load_suite(a.suite);
    if (suite.cells.empty()) {
        throw UsageError("suite " + a.suite + " has no cells");
    }
    BenchConfig cfg;
    try {
        cfg = load_config(a.config, suite);
    } catch (const Error &e) {
        if (e.code() == Errc::Io) {
            throw;
        }
        throw UsageError(std::string("configuration: ") + e.what());
    }
    const auto backend = make_backend(cfg);
    const BenchmarkMatrix m = run_matrix(suite, cfg, *backend, a.jobs);
    const fs::path out = a.out.empty() ? output_root() / "results.json" : fs::path(a.out);
    persist(m, out, cfg.deterministic);
    fs::path csv = out;
    csv.replace_extension(".csv");
    write_text_file(csv, matrix_csv(m));
    const std::size_t cols = m.depths.size();
    for (std::size_t r = 0; r < m.qubits.size(); ++r) {
        int identified = 0;
        int executed = 0;
        double f_sum = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            const CellResult &cell = m.cells[r * cols + c];
            if (cell.status == CellStatus::Skipped) {
                continue;
            }
            ++executed;
            if (cell.status == CellStatus::Identified) {
                ++identified;
                f_sum += cell.mean_f.value_or(0.0);
            }
        }
        std::cout << "n=" << m.qubits[r] << ": executed " << executed << "/" << cols
                  << ", identified " << identified << ", skipped " << cols - static_cast<std::size_t>(executed);
        if (identified > 0) {
            std::cout << ", mean f " << fixed(f_sum / identified, 4);
        }
        std::cout << "\n";
    }
    std::cout << "wrote " << out.string() << " and " << csv.string() << "\n";
    return 0;
}

// ---- report ----

struct ReportArgs {
    std::string mode = "heatmap";
    std::vector<std::string> inputs;
    std::string out;
    std::string title;
    std::string suite;
    std::string cell;
    int rep = 0;
    int top_k = 8;
};

fs::path default_report_path(const std::string &input, const std::string &suffix) {
    fs::path p(input);
    return p.parent_path() / (p.stem().string() + suffix);
}

void write_svg_and_csv(const fs::path &svg_path, const std::string &svg, const std::string &csv) {
    write_text_file(svg_path, svg);
    fs::path csv_path = svg_path;
    csv_path.replace_extension(".csv");
    write_text_file(csv_path, csv);
    std::cout << "wrote " << svg_path.string() << " and " << csv_path.string() << "\n";
}

int run_report(const ReportArgs &a) {
    ReportStyle style;
    style.title = a.title;
    if (a.mode == "heatmap") {
        if (a.inputs.size() != 1) {
            throw UsageError("heatmap mode takes exactly one matrix file");
        }
        const BenchmarkMatrix m = load_matrix(a.inputs[0]);
        const fs::path out = a.out.empty() ? default_report_path(a.inputs[0], "_heatmap.svg") : fs::path(a.out);
        write_svg_and_csv(out, render_matrix_heatmap(m, style), matrix_csv(m));
        return 0;
    }
    if (a.mode == "delta") {
        if (a.inputs.size() != 2) {
            throw UsageError("delta mode takes exactly two matrix files (A then B, delta = A - B)");
        }
        const DeltaGrid g = delta_matrix(load_matrix(a.inputs[0]), load_matrix(a.inputs[1]));
        const fs::path out = a.out.empty() ? output_root() / "delta.svg" : fs::path(a.out);
        write_svg_and_csv(out, render_delta_heatmap(g, style), delta_csv(g));
        return 0;
    }
    // histogram
    if (a.inputs.size() != 1 || a.suite.empty() || a.cell.empty()) {
        throw UsageError("histogram mode takes one matrix file, --suite and --cell n,d");
    }
    const auto comma = a.cell.find(',');
    if (comma == std::string::npos) {
        throw UsageError("--cell expects n,d");
    }
    int n = 0;
    int d = 0;
    try {
        n = std::stoi(a.cell.substr(0, comma));
        d = std::stoi(a.cell.substr(comma + 1));
    } catch (const std::exception &) {
        throw UsageError("--cell expects n,d");
    }
    const BenchmarkMatrix m = load_matrix(a.inputs[0]);
    const Suite suite = load_suite(a.suite);
    const SuiteCell *sc = suite.find(n, d);
    if (sc == nullptr) {
        fail(Errc::MissingCircuit, "suite has no cell " + cell_stem(n, d));
    }
    const CellResult &cell = m.at(n, d);
    if (a.rep < 0 || a.rep >= static_cast<int>(cell.runs.size())) {
        throw UsageError("--rep out of range for cell " + cell_stem(n, d));
    }
    const RunRecord &run = cell.runs[static_cast<std::size_t>(a.rep)];
    // Infinite-shot records keep frequencies only; scale them to a nominal count.
    const std::uint64_t shots = run.shots != 0 ? run.shots : 1000000;
    ShotHistogram hist{n, shots, {}};
    for (const auto &o : run.top) {
        const auto count = static_cast<std::uint64_t>(std::llround(o.frequency * static_cast<double>(shots)));
        if (count > 0) {
            hist.counts[BitString::parse(o.bits).index()] = count;
        }
    }
    const fs::path out = a.out.empty()
                             ? default_report_path(a.inputs[0], "_" + cell_stem(n, d) + "_rep" +
                                                                    std::to_string(a.rep) + ".svg")
                             : fs::path(a.out);
    const BitString target = sc->circuit.target();
    write_svg_and_csv(out, render_histogram(hist, target, a.top_k, style),
                      histogram_csv(hist, target, a.top_k));
    return 0;
}

// ---- export-qasm ----

struct ExportArgs {
    std::string suite;
    std::string out;
};

int run_export(const ExportArgs &a) {
    const Suite suite = load_suite(a.suite);
    const fs::path out = a.out.empty() ? output_root() / "qasm" : fs::path(a.out);
    std::ostringstream csv;
    csv << "n,d,file,two_qubit,single_qubit\n";
    for (const auto &c : suite.cells) {
        const std::string name = qasm_file_name(c.n, c.d, cell_seed(suite.seed, c.n, c.d));
        write_text_file(out / name, emit_qasm(c.circuit));
        const GateCount count = gate_count(c.circuit);
        csv << c.n << ',' << c.d << ',' << name << ',' << count.two_qubit << ','
            << count.single_qubit << '\n';
    }
    write_text_file(out / "gate_counts.csv", csv.str());
    std::cout << "wrote " << suite.cells.size() << " QASM files and "
              << (out / "gate_counts.csv").string() << "\n";
    return 0;
}

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::Parse:
    case Errc::SchemaVersion:
    case Errc::InvalidArgument:
    case Errc::InvalidDimension:
        return kExitUsage;
    default:
        return kExitRuntime;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Peaked random circuit benchmark"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto *g = app.add_subcommand("generate", "Build, optimize and persist a circuit suite");
    g->add_option("--qubits", gen.qubits, "Qubit counts, e.g. 2..6")->required();
    g->add_option("--depths", gen.depths, "Depths, e.g. 2..10")->required();
    g->add_option("--seed", gen.seed, "Reference-circuit seed")->capture_default_str();
    g->add_option("--out", gen.out, "Output directory (default $PRC_OUT_DIR/suite)");
    g->add_option("--jobs", gen.jobs, "Worker threads")->check(CLI::PositiveNumber);
    g->add_option("--reference-qubits", gen.reference_qubits)->capture_default_str();
    g->add_option("--reference-depth", gen.reference_depth)->capture_default_str();
    g->add_option("--stage1-iters", gen.stage1_iters, "L-BFGS iteration budget")->capture_default_str();
    g->add_option("--stage2-iters", gen.stage2_iters, "Adam iteration budget")->capture_default_str();
    g->add_option("--stop-tol", gen.stop_tol, "Gradient-norm stopping tolerance")->capture_default_str();

    BenchArgs bench;
    auto *b = app.add_subcommand("bench", "Run the benchmark matrix over a suite");
    b->add_option("--suite", bench.suite, "Suite manifest")->required();
    b->add_option("--config", bench.config, "Benchmark configuration JSON");
    b->add_option("--out", bench.out, "Matrix JSON path (default $PRC_OUT_DIR/results.json)");
    b->add_option("--jobs", bench.jobs, "Worker threads")->check(CLI::PositiveNumber);

    ReportArgs rep;
    auto *r = app.add_subcommand("report", "Render heatmaps, delta maps and histograms");
    r->add_option("--mode", rep.mode)->check(CLI::IsMember({"heatmap", "delta", "histogram"}))->capture_default_str();
    r->add_option("matrices", rep.inputs, "Matrix JSON file(s)")->required();
    r->add_option("--out", rep.out, "SVG path; the CSV companion sits next to it");
    r->add_option("--title", rep.title);
    r->add_option("--suite", rep.suite, "Suite manifest (histogram mode)");
    r->add_option("--cell", rep.cell, "n,d (histogram mode)");
    r->add_option("--rep", rep.rep, "Repetition index (histogram mode)")->capture_default_str();
    r->add_option("--top-k", rep.top_k)->check(CLI::PositiveNumber)->capture_default_str();

    ExportArgs ex;
    auto *e = app.add_subcommand("export-qasm", "Write OpenQASM 2.0 files and gate counts");
    e->add_option("--suite", ex.suite, "Suite manifest")->required();
    e->add_option("--out", ex.out, "Output directory (default $PRC_OUT_DIR/qasm)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &err) {
        return app.exit(err);
    } catch (const CLI::CallForAllHelp &err) {
        return app.exit(err);
    } catch (const CLI::ParseError &err) {
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (g->parsed()) {
            return run_generate(gen);
        }
        if (b->parsed()) {
            return run_bench(bench);
        }
        if (r->parsed()) {
            return run_report(rep);
        }
        return run_export(ex);
    } catch (const UsageError &err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const Error &err) {
        std::cerr << "error [" << to_string(err.code()) << "]: " << err.what() << "\n";
        return exit_code_for(err.code());
    } catch (const std::exception &err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitRuntime;
    }
}
