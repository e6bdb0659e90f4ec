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
 * Dense statevector simulation of linear-chain circuits.
 *
 * Amplitudes are indexed by basis bitstring with qubit 0 as the least
 * significant bit, matching BitString::index().
 */
#pragma once

#include "prc/circuit.hpp"
#include "prc/rng.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace prc {

/// Largest register the simulator will allocate (2^26 amplitudes, 1 GiB).
inline constexpr int kMaxSimQubits = 26;

class Statevector {
  public:
    /// |0^n>.
    explicit Statevector(int num_qubits);

    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] const std::vector<Complex> &amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::uint64_t index) const { return amps_[index]; }

    /// Applies `u` to qubits (qubit_low, qubit_low + 1); u is indexed with
    /// qubit_low as the low bit.
    void apply(const Mat4 &u, int qubit_low);
    void apply_x(int qubit);
    void set_basis_state(std::uint64_t index);

    [[nodiscard]] double norm() const;

  private:
    int n_;
    std::vector<Complex> amps_;
};

struct ProbabilityDistribution {
    int num_qubits = 0;
    std::vector<double> probs;
};

struct ShotHistogram {
    int num_qubits = 0;
    std::uint64_t shots = 0;
    std::map<std::uint64_t, std::uint64_t> counts; // basis index -> count

    [[nodiscard]] std::uint64_t count(std::uint64_t index) const {
        auto it = counts.find(index);
        return it == counts.end() ? 0 : it->second;
    }
    friend bool operator==(const ShotHistogram &, const ShotHistogram &) = default;
};

/// C|0^n>. Throws Errc::Capacity above kMaxSimQubits.
Statevector run(const Circuit &circuit);

/// <target|C|0^n>.
Complex peak_amplitude(const Circuit &circuit);

ProbabilityDistribution full_distribution(const Circuit &circuit);
ProbabilityDistribution distribution_of(const Statevector &state);

/// `shots` i.i.d. draws by inverse-CDF lookup. Throws on zero shots.
ShotHistogram sample(const ProbabilityDistribution &dist, std::uint64_t shots, Rng &rng);

struct PeakGradient {
    Complex amplitude;
    double probability = 0.0;
    /// d probability / d theta for every peaking-half structural parameter,
    /// ordered as Circuit::peaking_parameters().
    std::vector<double> gradient;
};

/// Adjoint-method gradient of |<target|C|0^n>|^2: one forward run, then a
/// reverse sweep that un-computes the state and the target costate gate by
/// gate and contracts each gate's 4x4 environment with its parameter
/// derivatives.
PeakGradient peak_gradient(const Circuit &circuit);

} // namespace prc
