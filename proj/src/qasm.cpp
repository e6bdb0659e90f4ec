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
#include "prc/qasm.hpp"

#include "prc/hash.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace prc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroAngle = 1e-12;

void push_rotation(std::vector<NativeGate> &out, NativeKind kind, int qubit, double angle) {
    // Rz and Ry are 4 pi periodic; a 2 pi shift is a global sign.
    const double wrapped = std::remainder(angle, 2.0 * kPi);
    if (std::abs(wrapped) <= 1e-15) {
        return;
    }
    out.push_back({kind, qubit, qubit, wrapped});
}

void push_euler(std::vector<NativeGate> &out, int qubit, const EulerZYZ &e) {
    push_rotation(out, NativeKind::Rz, qubit, e.gamma);
    push_rotation(out, NativeKind::Ry, qubit, e.beta);
    push_rotation(out, NativeKind::Rz, qubit, e.alpha);
}

void push_cx(std::vector<NativeGate> &out, int control, int target) {
    out.push_back({NativeKind::Cx, control, target, 0.0});
}

std::string format_angle(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::vector<NativeGate> decompose_gate(const GateParams &params) {
    const GateParams p = canonicalize(params);
    const double a = p.xx;
    const double b = p.yy;
    const double c = p.zz;
    std::vector<NativeGate> out;
    const bool no_b = std::abs(b) <= kZeroAngle;
    const bool no_c = std::abs(c) <= kZeroAngle;

    if (std::abs(a) <= kZeroAngle && no_b && no_c) {
        for (int q = 0; q < 2; ++q) {
            push_euler(out, q, zyz_decompose(euler_matrix(p.post[q]) * euler_matrix(p.pre[q])));
        }
        return out;
    }
    push_euler(out, 0, p.pre[0]);
    push_euler(out, 1, p.pre[1]);
    if (no_b && no_c) {
        // exp(iaXX) = Ry(pi/2)^2 exp(iaZZ) Ry(-pi/2)^2 and exp(iaZZ) = CX Rz_high(-2a) CX.
        push_rotation(out, NativeKind::Ry, 0, -kPi / 2);
        push_rotation(out, NativeKind::Ry, 1, -kPi / 2);
        push_cx(out, 0, 1);
        push_rotation(out, NativeKind::Rz, 1, -2.0 * a);
        push_cx(out, 0, 1);
        push_rotation(out, NativeKind::Ry, 0, kPi / 2);
        push_rotation(out, NativeKind::Ry, 1, kPi / 2);
    } else {
        push_rotation(out, NativeKind::Rz, 0, -kPi / 2);
        push_cx(out, 0, 1);
        push_rotation(out, NativeKind::Rz, 1, -2.0 * c + kPi / 2);
        push_rotation(out, NativeKind::Ry, 0, 2.0 * a - kPi / 2);
        push_cx(out, 1, 0);
        push_rotation(out, NativeKind::Ry, 0, -2.0 * b + kPi / 2);
        push_cx(out, 0, 1);
        push_rotation(out, NativeKind::Rz, 1, kPi / 2);
    }
    push_euler(out, 0, p.post[0]);
    push_euler(out, 1, p.post[1]);
    return out;
}

std::string emit_qasm(const Circuit &circuit) {
    const int n = circuit.num_qubits();
    std::string text = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    text += "qreg q[" + std::to_string(n) + "];\n";
    text += "creg c[" + std::to_string(n) + "];\n";
    for (const auto &layer : circuit.layers()) {
        for (const auto &g : layer) {
            for (const auto &op : decompose_gate(g.params)) {
                const std::string q = "q[" + std::to_string(g.qubit_low + op.qubit) + "]";
                switch (op.kind) {
                case NativeKind::Rz:
                    text += "rz(" + format_angle(op.angle) + ") " + q + ";\n";
                    break;
                case NativeKind::Ry:
                    text += "ry(" + format_angle(op.angle) + ") " + q + ";\n";
                    break;
                case NativeKind::Cx:
                    text += "cx " + q + ",q[" + std::to_string(g.qubit_low + op.target) + "];\n";
                    break;
                }
            }
        }
    }
    // Ry(pi) = X Z; the Z is invisible to the terminal measurement.
    for (int q : circuit.final_flips()) {
        text += "ry(pi) q[" + std::to_string(q) + "];\n";
    }
    text += "measure q -> c;\n";
    return text;
}

GateCount gate_count(const Circuit &circuit) {
    GateCount count;
    for (const auto &layer : circuit.layers()) {
        for (const auto &g : layer) {
            for (const auto &op : decompose_gate(g.params)) {
                if (op.kind == NativeKind::Cx) {
                    ++count.two_qubit;
                } else {
                    ++count.single_qubit;
                }
            }
        }
    }
    count.single_qubit += circuit.final_flips().size();
    return count;
}

std::string qasm_file_name(int n, int d, std::uint64_t seed) {
    return "prc_n" + std::to_string(n) + "_d" + std::to_string(d) + "_s" +
           hex64(fnv1a64(std::to_string(seed))).substr(0, 8) + ".qasm";
}

} // namespace prc
