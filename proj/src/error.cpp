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

#include "prc/error.hpp"

namespace prc {

std::string_view to_string(Errc code) {
    switch (code) {
    case Errc::InvalidDimension: return "invalid-dimension";
    case Errc::InvalidArgument: return "invalid-argument";
    case Errc::DecompositionFailure: return "decomposition-failure";
    case Errc::Capacity: return "capacity";
    case Errc::Unsupported: return "unsupported";
    case Errc::NothingToOptimize: return "nothing-to-optimize";
    case Errc::UndefinedMetric: return "undefined-metric";
    case Errc::DomainMismatch: return "domain-mismatch";
    case Errc::MissingCircuit: return "missing-circuit";
    case Errc::Parse: return "parse";
    case Errc::SchemaVersion: return "schema-version";
    case Errc::Io: return "io";
    }
    return "unknown";
}

} // namespace prc
