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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace prc {

/// Measurement outcome over n qubits, stored as a basis index with qubit 0
/// in the least significant bit. The text form lists qubit 0 first, so
/// "100" on three qubits is index 1.
class BitString {
  public:
    static constexpr int kMaxQubits = 63;

    BitString() = default;
    BitString(int num_qubits, std::uint64_t index);

    static BitString zeros(int num_qubits) { return {num_qubits, 0}; }
    static BitString ones(int num_qubits);
    static BitString parse(std::string_view text);

    [[nodiscard]] int size() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t index() const noexcept { return bits_; }
    [[nodiscard]] bool bit(int qubit) const noexcept {
        return ((bits_ >> qubit) & 1U) != 0;
    }
    [[nodiscard]] std::string str() const;

    BitString operator^(const BitString &other) const;

    friend bool operator==(const BitString &, const BitString &) = default;

  private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

} // namespace prc
