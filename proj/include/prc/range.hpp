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

#include "prc/error.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace prc {

/// "a..b" (inclusive) or a single integer "a". Throws Errc::Parse otherwise.
inline std::vector<int> parse_int_range(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        int value = 0;
        const auto *end = part.data() + part.size();
        const auto res = std::from_chars(part.data(), end, value);
        if (part.empty() || res.ec != std::errc{} || res.ptr != end) {
            fail(Errc::Parse, "bad integer range '" + std::string(text) + "'");
        }
        return value;
    };
    const auto dots = text.find("..");
    const int lo = parse_int(text.substr(0, dots));
    const int hi = dots == std::string_view::npos ? lo : parse_int(text.substr(dots + 2));
    if (hi < lo) {
        fail(Errc::Parse, "empty integer range '" + std::string(text) + "'");
    }
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) {
        out.push_back(v);
    }
    return out;
}

} // namespace prc
