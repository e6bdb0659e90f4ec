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
 * SVG heatmaps and histograms with CSV companions.
 */
#pragma once

#include "prc/bitstring.hpp"
#include "prc/matrix.hpp"
#include "prc/statevector.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace prc {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    [[nodiscard]] std::string hex() const;
    friend bool operator==(const Rgb &, const Rgb &) = default;
};

inline constexpr Rgb kNonIdentifiedGray{0xd3, 0xd3, 0xd3};
inline constexpr Rgb kSkippedWhite{0xff, 0xff, 0xff};
inline constexpr Rgb kTargetRed{0xd6, 0x27, 0x28};
inline constexpr Rgb kBarBlue{0x4c, 0x72, 0xb0};

/// Viridis-style ramp over [0, 1], clamped; luminance increases with f.
Rgb sequential_color(double f);

/// White at 0, pure blue at -1, pure red at +1, linear in between; clamped.
Rgb diverging_color(double value);

struct ReportStyle {
    int cell = 24;        // cell edge in px
    int margin_left = 60; // room for the qubit axis
    int margin_top = 40;  // room for the title
    std::string title;
};

/// Staircase between executed and skipped cells, in grid units: x counts
/// depth columns from the left, y counts qubit rows from the bottom (row 0 is
/// the smallest n). Row r contributes a vertical edge at x = 1 + the column of
/// its last non-skipped cell (0 if none). Consecutive duplicates are dropped.
std::vector<std::pair<int, int>> executed_boundary(const BenchmarkMatrix &matrix);

std::string render_matrix_heatmap(const BenchmarkMatrix &matrix, const ReportStyle &style = {});

std::string render_delta_heatmap(const DeltaGrid &delta, const ReportStyle &style = {});

/// Top-k outcomes by count (ties by index). The target is highlighted and
/// appended when outside the top k. Bar heights are relative to the tallest.
std::string render_histogram(const ShotHistogram &hist, const BitString &target, int top_k,
                             const ReportStyle &style = {});

/// Columns bits,count,frequency,is_target for the bars render_histogram draws.
std::string histogram_csv(const ShotHistogram &hist, const BitString &target, int top_k);

} // namespace prc
