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

#include "prc/circuit.hpp"

#include "prc/error.hpp"

#include <algorithm>
#include <string>

namespace prc {

namespace {

Role role_for_layer(int layer, int depth) {
    return layer < random_depth_for(depth) ? Role::Random : Role::Peaking;
}

void check_dimensions(int num_qubits, int depth) {
    if (num_qubits < 2 || depth < 2) {
        fail(Errc::InvalidDimension, "circuit needs n >= 2 and d >= 2, got n=" +
                                         std::to_string(num_qubits) +
                                         " d=" + std::to_string(depth));
    }
    if (num_qubits > BitString::kMaxQubits) {
        fail(Errc::InvalidDimension, "qubit count too large: " + std::to_string(num_qubits));
    }
}

const GatePlacement *find_gate(const Layer &layer, int qubit_low) {
    for (const auto &g : layer) {
        if (g.qubit_low == qubit_low) {
            return &g;
        }
    }
    return nullptr;
}

} // namespace

Circuit::Circuit(int num_qubits, int depth, std::vector<Layer> layers, BitString target,
                 std::vector<int> final_flips)
    : n_(num_qubits), d_(depth), layers_(std::move(layers)), target_(target),
      final_flips_(std::move(final_flips)) {
    if (n_ < 1 || n_ > BitString::kMaxQubits || d_ < 0) {
        fail(Errc::InvalidDimension, "invalid circuit dimensions");
    }
    if (static_cast<int>(layers_.size()) != d_) {
        fail(Errc::InvalidArgument, "layer count " + std::to_string(layers_.size()) +
                                        " does not match depth " + std::to_string(d_));
    }
    if (target_.size() != n_) {
        fail(Errc::InvalidArgument, "target length does not match qubit count");
    }
    for (int l = 0; l < d_; ++l) {
        std::vector<bool> used(static_cast<std::size_t>(n_), false);
        for (const auto &g : layers_[static_cast<std::size_t>(l)]) {
            if (g.layer != l) {
                fail(Errc::InvalidArgument, "gate layer index mismatch in layer " + std::to_string(l));
            }
            if (g.qubit_low < 0 || g.qubit_low + 1 >= n_) {
                fail(Errc::InvalidArgument, "gate crosses the register boundary in layer " +
                                                std::to_string(l));
            }
            auto lo = static_cast<std::size_t>(g.qubit_low);
            if (used[lo] || used[lo + 1]) {
                fail(Errc::InvalidArgument, "overlapping gates in layer " + std::to_string(l));
            }
            used[lo] = used[lo + 1] = true;
            if (g.role != role_for_layer(l, d_)) {
                fail(Errc::InvalidArgument, "gate role inconsistent with half split in layer " +
                                                std::to_string(l));
            }
        }
    }
    std::sort(final_flips_.begin(), final_flips_.end());
    if (std::adjacent_find(final_flips_.begin(), final_flips_.end()) != final_flips_.end()) {
        fail(Errc::InvalidArgument, "duplicate standalone flip");
    }
    for (int q : final_flips_) {
        if (q < 0 || q >= n_) {
            fail(Errc::InvalidArgument, "standalone flip outside register");
        }
    }
}

Circuit Circuit::empty(int num_qubits, int depth) {
    return {num_qubits, depth, std::vector<Layer>(static_cast<std::size_t>(depth)),
            BitString::zeros(num_qubits)};
}

std::size_t Circuit::num_gates() const {
    std::size_t total = 0;
    for (const auto &layer : layers_) {
        total += layer.size();
    }
    return total;
}

std::size_t Circuit::num_peaking_gates() const {
    std::size_t total = 0;
    for (int l = random_depth(); l < d_; ++l) {
        total += layers_[static_cast<std::size_t>(l)].size();
    }
    return total;
}

std::vector<double> Circuit::peaking_parameters() const {
    std::vector<double> out;
    out.reserve(num_peaking_gates() * GateParams::kStructural);
    for (int l = random_depth(); l < d_; ++l) {
        for (const auto &g : layers_[static_cast<std::size_t>(l)]) {
            const auto values = g.params.to_array();
            out.insert(out.end(), values.begin(), values.begin() + GateParams::kStructural);
        }
    }
    return out;
}

Circuit Circuit::with_peaking_parameters(std::span<const double> values) const {
    if (values.size() != num_peaking_gates() * GateParams::kStructural) {
        fail(Errc::InvalidArgument, "peaking parameter vector has wrong length");
    }
    Circuit out = *this;
    std::size_t at = 0;
    for (int l = random_depth(); l < d_; ++l) {
        for (auto &g : out.layers_[static_cast<std::size_t>(l)]) {
            const double phase = g.params.phase;
            g.params = GateParams::from_array(values.subspan(at, GateParams::kStructural));
            g.params.phase = phase;
            at += GateParams::kStructural;
        }
    }
    return out;
}

Circuit Circuit::map_gates(const std::function<GateParams(const GatePlacement &)> &f) const {
    Circuit out = *this;
    for (auto &layer : out.layers_) {
        for (auto &g : layer) {
            g.params = f(g);
        }
    }
    return out;
}

Circuit Circuit::with_target(const BitString &target) const {
    return {n_, d_, layers_, target, final_flips_};
}

std::vector<std::vector<int>> brickwall_layout(int num_qubits, int depth) {
    check_dimensions(num_qubits, depth);
    const int r = random_depth_for(depth);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(depth));
    for (int l = 0; l < depth; ++l) {
        auto &slots = out[static_cast<std::size_t>(l)];
        if (num_qubits == 2) {
            slots.push_back(0);
            continue;
        }
        // Peaking layer r + j mirrors random layer r - 1 - j.
        const int source = l < r ? l : r - 1 - (l - r);
        const int offset = ((source % 2) + 2) % 2;
        for (int q = offset; q + 1 < num_qubits; q += 2) {
            slots.push_back(q);
        }
    }
    return out;
}

bool conforms_to_layout(const Circuit &circuit) {
    if (circuit.num_qubits() < 2 || circuit.depth() < 2) {
        return false;
    }
    const auto layout = brickwall_layout(circuit.num_qubits(), circuit.depth());
    for (std::size_t l = 0; l < layout.size(); ++l) {
        std::vector<int> actual;
        for (const auto &g : circuit.layers()[l]) {
            actual.push_back(g.qubit_low);
        }
        std::sort(actual.begin(), actual.end());
        if (actual != layout[l]) {
            return false;
        }
    }
    return true;
}

Circuit build_reference_circuit(int max_qubits, int max_depth, std::uint64_t seed) {
    const auto layout = brickwall_layout(max_qubits, max_depth);
    Rng rng(seed);
    std::vector<Layer> layers(layout.size());
    for (std::size_t l = 0; l < layout.size(); ++l) {
        const int layer = static_cast<int>(l);
        for (int q : layout[l]) {
            layers[l].push_back({layer, q, role_for_layer(layer, max_depth),
                                 kak_decompose(haar_random_unitary(rng))});
        }
    }
    return {max_qubits, max_depth, std::move(layers), BitString::zeros(max_qubits)};
}

Circuit derive_subcircuit(const Circuit &reference, int num_qubits, int depth) {
    check_dimensions(num_qubits, depth);
    if (num_qubits > reference.num_qubits() || depth > reference.depth()) {
        fail(Errc::InvalidDimension, "sub-circuit (" + std::to_string(num_qubits) + ", " +
                                         std::to_string(depth) + ") exceeds reference (" +
                                         std::to_string(reference.num_qubits()) + ", " +
                                         std::to_string(reference.depth()) + ")");
    }
    const auto layout = brickwall_layout(num_qubits, depth);
    const int r = random_depth_for(depth);
    const int ref_r = reference.random_depth();
    std::vector<Layer> layers(layout.size());
    for (int l = 0; l < depth; ++l) {
        const int ref_layer = l < r ? l : ref_r + (l - r);
        const Layer &source = reference.layers()[static_cast<std::size_t>(ref_layer)];
        for (int q : layout[static_cast<std::size_t>(l)]) {
            const GatePlacement *g = find_gate(source, q);
            if (g == nullptr) {
                g = find_gate(source, q + 1);
            }
            if (g == nullptr) {
                g = find_gate(source, q - 1);
            }
            if (g == nullptr) {
                fail(Errc::InvalidArgument, "reference layer " + std::to_string(ref_layer) +
                                                " has no gate near qubit " + std::to_string(q));
            }
            layers[static_cast<std::size_t>(l)].push_back(
                {l, q, role_for_layer(l, depth), g->params});
        }
    }
    return {num_qubits, depth, std::move(layers), BitString::zeros(num_qubits)};
}

Circuit build_exact_inverse_peaking(const Circuit &circuit) {
    if (circuit.depth() % 2 != 0) {
        fail(Errc::Unsupported, "exact inverse peaking needs equal halves (even depth), got d=" +
                                    std::to_string(circuit.depth()));
    }
    const int r = circuit.random_depth();
    std::vector<Layer> layers(circuit.layers().begin(), circuit.layers().begin() + r);
    for (int j = 0; j < r; ++j) {
        const int layer = r + j;
        Layer mirrored;
        for (const auto &g : circuit.layers()[static_cast<std::size_t>(r - 1 - j)]) {
            mirrored.push_back({layer, g.qubit_low, Role::Peaking, inverse(g.params)});
        }
        layers.push_back(std::move(mirrored));
    }
    return {circuit.num_qubits(), circuit.depth(), std::move(layers),
            BitString::zeros(circuit.num_qubits()), {}};
}

Circuit retarget(const Circuit &circuit, const BitString &s) {
    const int n = circuit.num_qubits();
    if (s.size() != n) {
        fail(Errc::InvalidArgument, "retarget: bitstring length " + std::to_string(s.size()) +
                                        " does not match " + std::to_string(n) + " qubits");
    }
    if (s.index() == 0) {
        return circuit;
    }
    std::vector<Layer> layers = circuit.layers();
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    if (!layers.empty()) {
        for (auto &g : layers.back()) {
            const bool flip_lo = s.bit(g.qubit_low);
            const bool flip_hi = s.bit(g.qubit_low + 1);
            covered[static_cast<std::size_t>(g.qubit_low)] = true;
            covered[static_cast<std::size_t>(g.qubit_low) + 1] = true;
            if (!flip_lo && !flip_hi) {
                continue;
            }
            const Mat2 id = Mat2::Identity();
            const Mat4 x = kron(flip_hi ? pauli_x() : id, flip_lo ? pauli_x() : id);
            g.params = kak_decompose(x * reconstruct(g.params));
        }
    }
    // Standalone flips toggle, so retargeting twice by s restores the circuit's statistics.
    std::vector<int> flips = circuit.final_flips();
    for (int q = 0; q < n; ++q) {
        if (!s.bit(q) || covered[static_cast<std::size_t>(q)]) {
            continue;
        }
        auto it = std::find(flips.begin(), flips.end(), q);
        if (it != flips.end()) {
            flips.erase(it);
        } else {
            flips.push_back(q);
        }
    }
    return {n, circuit.depth(), std::move(layers), circuit.target() ^ s, std::move(flips)};
}

} // namespace prc
