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
 * OpenQASM 2.0 export over the native set {rz, ry, cx}.
 */
#pragma once

#include "prc/circuit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace prc {

enum class NativeKind { Rz, Ry, Cx };

/// Local qubit indices: 0 = low, 1 = high. For Cx, qubit is the control and
/// target the target; rotations ignore target.
struct NativeGate {
    NativeKind kind = NativeKind::Rz;
    int qubit = 0;
    int target = 0;
    double angle = 0.0;

    friend bool operator==(const NativeGate &, const NativeGate &) = default;
};

/// Native sequence in application order whose product equals reconstruct(p)
/// up to global phase. Non-canonical cores are canonicalized first. Zero cores
/// use no CNOT, (a, 0, 0) cores two, everything else three.
std::vector<NativeGate> decompose_gate(const GateParams &p);

std::string emit_qasm(const Circuit &circuit);

struct GateCount {
    std::uint64_t two_qubit = 0;
    std::uint64_t single_qubit = 0;

    friend bool operator==(const GateCount &, const GateCount &) = default;
};

GateCount gate_count(const Circuit &circuit);

/// "prc_n{n}_d{d}_s{hash}.qasm", hash being 8 hex digits derived from the seed.
std::string qasm_file_name(int n, int d, std::uint64_t seed);

} // namespace prc
