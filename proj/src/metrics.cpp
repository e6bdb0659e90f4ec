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
#include "prc/metrics.hpp"

#include "prc/error.hpp"
#include "prc/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace prc {

namespace {

struct Frequencies {
    double target = 0.0;
    double competitor = 0.0;
};

Frequencies frequencies(const ShotHistogram &hist, const BitString &target) {
    if (hist.counts.empty() || hist.shots == 0) {
        fail(Errc::InvalidArgument, "empty histogram");
    }
    if (hist.num_qubits != target.size()) {
        fail(Errc::InvalidArgument, "target width does not match histogram");
    }
    std::uint64_t competitor = 0;
    for (const auto &[index, count] : hist.counts) {
        if (index != target.index()) {
            competitor = std::max(competitor, count);
        }
    }
    const auto shots = static_cast<double>(hist.shots);
    return {static_cast<double>(hist.count(target.index())) / shots,
            static_cast<double>(competitor) / shots};
}

Frequencies frequencies(const ProbabilityDistribution &dist, const BitString &target) {
    if (dist.probs.size() != (std::size_t{1} << target.size())) {
        fail(Errc::InvalidArgument, "target width does not match distribution");
    }
    Frequencies out;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        if (i == target.index()) {
            out.target = dist.probs[i];
        } else {
            out.competitor = std::max(out.competitor, dist.probs[i]);
        }
    }
    return out;
}

double contrast(const Frequencies &f) {
    if (f.target + f.competitor <= 0.0) {
        fail(Errc::UndefinedMetric, "relative peakedness undefined: no mass on target or competitors");
    }
    return (f.target - f.competitor) / (f.target + f.competitor);
}

RunMetrics assemble(const Frequencies &fr, double c_max) {
    RunMetrics m;
    m.identified = fr.target > fr.competitor;
    m.p_hat_peak = fr.target;
    m.p_hat_second = fr.competitor;
    m.c_exp = contrast(fr);
    m.f_raw = fidelity_error(m.c_exp, c_max);
    m.f = clamp_unit(m.f_raw);
    return m;
}

} // namespace

bool identify(const ShotHistogram &hist, const BitString &target) {
    const Frequencies f = frequencies(hist, target);
    return f.target > f.competitor;
}

double relative_peakedness(const ShotHistogram &hist, const BitString &target) {
    return contrast(frequencies(hist, target));
}

double fidelity_error(double c_exp, double c_max) {
    if (!(c_max > 0.0)) {
        fail(Errc::InvalidArgument, "c_max must be positive");
    }
    return 1.0 - c_exp / c_max;
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

RunMetrics run_metrics(const ShotHistogram &hist, const BitString &target, double c_max) {
    return assemble(frequencies(hist, target), c_max);
}

RunMetrics run_metrics(const ProbabilityDistribution &dist, const BitString &target,
                       double c_max) {
    return assemble(frequencies(dist, target), c_max);
}

std::optional<double> DeltaGrid::at(int n, int d) const {
    const auto row = std::find(qubits.begin(), qubits.end(), n);
    const auto col = std::find(depths.begin(), depths.end(), d);
    if (row == qubits.end() || col == depths.end()) {
        fail(Errc::InvalidArgument, "cell outside the delta grid");
    }
    return values[static_cast<std::size_t>(row - qubits.begin()) * depths.size() +
                  static_cast<std::size_t>(col - depths.begin())];
}

DeltaGrid delta_matrix(const BenchmarkMatrix &a, const BenchmarkMatrix &b) {
    if (a.qubits != b.qubits || a.depths != b.depths) {
        fail(Errc::DomainMismatch, "delta_matrix: matrices cover different (n, d) grids");
    }
    DeltaGrid out{a.qubits, a.depths, {}};
    out.values.reserve(a.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        const CellResult &ca = a.cells[i];
        const CellResult &cb = b.cells[i];
        if (ca.status == CellStatus::Identified && cb.status == CellStatus::Identified &&
            ca.mean_f && cb.mean_f) {
            out.values.emplace_back(*ca.mean_f - *cb.mean_f);
        } else {
            out.values.emplace_back(std::nullopt);
        }
    }
    return out;
}

std::string delta_csv(const DeltaGrid &grid) {
    std::ostringstream os;
    os.precision(17);
    os << "n,d,delta_f\n";
    for (std::size_t r = 0; r < grid.qubits.size(); ++r) {
        for (std::size_t c = 0; c < grid.depths.size(); ++c) {
            os << grid.qubits[r] << ',' << grid.depths[c] << ',';
            if (const auto &v = grid.values[r * grid.depths.size() + c]) {
                os << *v;
            }
            os << '\n';
        }
    }
    return os.str();
}

} // namespace prc
