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

#include "prc/bitstring.hpp"

#include "prc/error.hpp"

namespace prc {

BitString::BitString(int num_qubits, std::uint64_t index) : n_(num_qubits), bits_(index) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
        fail(Errc::InvalidDimension, "bitstring length out of range: " + std::to_string(num_qubits));
    }
    if (num_qubits < 64 && (index >> num_qubits) != 0) {
        fail(Errc::InvalidArgument, "bitstring index has bits beyond qubit count");
    }
}

BitString BitString::ones(int num_qubits) {
    return {num_qubits, num_qubits == 0 ? 0 : (~std::uint64_t{0} >> (64 - num_qubits))};
}

BitString BitString::parse(std::string_view text) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            fail(Errc::Parse, "invalid bitstring character in '" + std::string(text) + "'");
        }
    }
    return {static_cast<int>(text.size()), bits};
}

std::string BitString::str() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int q = 0; q < n_; ++q) {
        if (bit(q)) {
            out[static_cast<std::size_t>(q)] = '1';
        }
    }
    return out;
}

BitString BitString::operator^(const BitString &other) const {
    if (other.n_ != n_) {
        fail(Errc::InvalidArgument, "bitstring length mismatch");
    }
    return {n_, bits_ ^ other.bits_};
}

} // namespace prc
