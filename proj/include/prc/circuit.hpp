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
 * Peaked random circuits on a linear chain: a random half R of Haar gates
 * followed by a mirrored, parameterized peaking half P, C = P R.
 */
#pragma once

#include "prc/bitstring.hpp"
#include "prc/gate.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace prc {

enum class Role { Random, Peaking };

struct GatePlacement {
    int layer = 0;
    int qubit_low = 0; // acts on (qubit_low, qubit_low + 1)
    Role role = Role::Random;
    GateParams params;

    friend bool operator==(const GatePlacement &, const GatePlacement &) = default;
};

using Layer = std::vector<GatePlacement>;

constexpr int random_depth_for(int depth) { return depth / 2; }
constexpr int peaking_depth_for(int depth) { return depth - depth / 2; }

/// Immutable once built. The constructor checks the structural invariants:
/// in-range disjoint pairs per layer, roles matching the half split, and a
/// target of the right width.
class Circuit {
  public:
    Circuit(int num_qubits, int depth, std::vector<Layer> layers, BitString target,
            std::vector<int> final_flips = {});

    /// A circuit with `depth` empty layers.
    static Circuit empty(int num_qubits, int depth);

    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] int depth() const noexcept { return d_; }
    [[nodiscard]] int random_depth() const noexcept { return random_depth_for(d_); }
    [[nodiscard]] int peaking_depth() const noexcept { return peaking_depth_for(d_); }
    [[nodiscard]] const std::vector<Layer> &layers() const noexcept { return layers_; }
    [[nodiscard]] const BitString &target() const noexcept { return target_; }
    /// Qubits that receive a standalone X after the last layer.
    [[nodiscard]] const std::vector<int> &final_flips() const noexcept { return final_flips_; }

    [[nodiscard]] std::size_t num_gates() const;
    [[nodiscard]] std::size_t num_peaking_gates() const;

    /// Peaking-half structural parameters, 15 per gate in layer order.
    [[nodiscard]] std::vector<double> peaking_parameters() const;
    [[nodiscard]] Circuit with_peaking_parameters(std::span<const double> values) const;

    /// Rebuilds the circuit with every gate's parameters replaced by f(gate).
    [[nodiscard]] Circuit
    map_gates(const std::function<GateParams(const GatePlacement &)> &f) const;

    [[nodiscard]] Circuit with_target(const BitString &target) const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    int n_;
    int d_;
    std::vector<Layer> layers_;
    BitString target_;
    std::vector<int> final_flips_;
};

/// Qubit_low positions of each layer. Random-half layer i uses pairs
/// starting at qubit (i mod 2); the peaking half mirrors that sequence so
/// layer random_depth repeats the alignment of layer random_depth - 1.
/// Two-qubit registers get the single pair (0, 1) on every layer.
std::vector<std::vector<int>> brickwall_layout(int num_qubits, int depth);

/// True when the gate positions equal brickwall_layout(n, d).
bool conforms_to_layout(const Circuit &circuit);

/// Every gate Haar random (stored via kak_decompose), target 0^n.
Circuit build_reference_circuit(int max_qubits, int max_depth, std::uint64_t seed);

/// Restricts the reference to the first n qubits and the leading layers of
/// each half, laid out per brickwall_layout(n, d). A slot (layer, q) takes
/// the reference gate at q, falling back to q + 1 and then q - 1 when the
/// reference layer is aligned differently.
Circuit derive_subcircuit(const Circuit &reference, int num_qubits, int depth);

/// Peaking half := layer-reversed gate-wise inverse of the random half.
/// Requires even depth.
Circuit build_exact_inverse_peaking(const Circuit &circuit);

/// Fuses an X into the final-layer gate on every qubit where s is 1 (or
/// appends a standalone X when no final-layer gate touches it). The output
/// distribution is XOR-shifted by s and the target becomes target ^ s.
Circuit retarget(const Circuit &circuit, const BitString &s);

} // namespace prc
