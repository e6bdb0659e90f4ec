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
#include "prc/report.hpp"

#include "prc/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace prc {

namespace {

constexpr int kLegendWidth = 150;
constexpr int kAxisRoom = 50;

std::string fmt(const char *pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::uint8_t channel(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

std::string open_svg(int width, int height) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
           "\" font-family=\"sans-serif\" font-size=\"11\">\n";
}

std::string text_at(double x, double y, const std::string &body, const std::string &extra = "") {
    return "<text x=\"" + fmt("%.1f", x) + "\" y=\"" + fmt("%.1f", y) + "\"" + extra + ">" +
           escape(body) + "</text>\n";
}

std::string rect(double x, double y, double w, double h, const Rgb &fill,
                 const std::string &extra = "") {
    return "<rect x=\"" + fmt("%.1f", x) + "\" y=\"" + fmt("%.1f", y) + "\" width=\"" +
           fmt("%.1f", w) + "\" height=\"" + fmt("%.1f", h) + "\" fill=\"" + fill.hex() + "\"" +
           extra + "/>\n";
}

struct Grid {
    int rows;
    int cols;
    ReportStyle style;

    [[nodiscard]] double x(int col) const { return style.margin_left + col * style.cell; }
    // Row 0 (smallest n) sits at the bottom.
    [[nodiscard]] double y_top(int row) const {
        return style.margin_top + (rows - 1 - row) * style.cell;
    }
    [[nodiscard]] double y_line(int grid_y) const {
        return style.margin_top + (rows - grid_y) * style.cell;
    }
    [[nodiscard]] int width() const { return style.margin_left + cols * style.cell + kLegendWidth; }
    [[nodiscard]] int height() const { return style.margin_top + rows * style.cell + kAxisRoom; }
};

std::string axes(const Grid &g, const std::vector<int> &qubits, const std::vector<int> &depths) {
    std::string out;
    const double bottom = g.y_line(0);
    for (std::size_t c = 0; c < depths.size(); ++c) {
        out += text_at(g.x(static_cast<int>(c)) + g.style.cell / 2.0, bottom + 14,
                       std::to_string(depths[c]), " text-anchor=\"middle\"");
    }
    for (std::size_t r = 0; r < qubits.size(); ++r) {
        out += text_at(g.style.margin_left - 6, g.y_top(static_cast<int>(r)) + g.style.cell / 2.0 + 4,
                       std::to_string(qubits[r]), " text-anchor=\"end\"");
    }
    out += text_at(g.x(0) + g.cols * g.style.cell / 2.0, bottom + 34, "depth d",
                   " class=\"axis-label\" text-anchor=\"middle\"");
    const double mid_y = g.style.margin_top + g.rows * g.style.cell / 2.0;
    out += "<text class=\"axis-label\" x=\"14\" y=\"" + fmt("%.1f", mid_y) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " + fmt("%.1f", mid_y) +
           ")\">qubits n</text>\n";
    if (!g.style.title.empty()) {
        out += text_at(g.style.margin_left, 20, g.style.title, " class=\"title\" font-size=\"14\"");
    }
    return out;
}

/// Vertical color bar sampled at 21 stops, with tick labels.
template <typename ColorFn>
std::string color_bar(const Grid &g, double lo, double hi, ColorFn color, const std::string &label) {
    const double x0 = g.x(g.cols) + 20;
    const double top = g.style.margin_top;
    const double bar_h = std::max(100.0, g.rows * g.style.cell * 0.6);
    constexpr int kStops = 21;
    std::string out = "<g class=\"legend\">\n";
    out += text_at(x0, top - 6, label);
    const double step = bar_h / kStops;
    for (int i = 0; i < kStops; ++i) {
        const double v = hi - (hi - lo) * i / (kStops - 1);
        out += rect(x0, top + i * step, 14, step + 0.5, color(v));
    }
    for (int i = 0; i < 3; ++i) {
        const double v = hi - (hi - lo) * i / 2.0;
        out += text_at(x0 + 20, top + (i / 2.0) * (bar_h - step) + step / 2 + 4, fmt("%.1f", v));
    }
    out += "</g>\n";
    return out;
}

} // namespace

std::string Rgb::hex() const {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

Rgb sequential_color(double f) {
    static constexpr std::array<std::array<double, 3>, 5> kStops{{
        {0x44, 0x01, 0x54},
        {0x3b, 0x52, 0x8b},
        {0x21, 0x91, 0x8c},
        {0x5e, 0xc9, 0x62},
        {0xfd, 0xe7, 0x25},
    }};
    const double t = std::isnan(f) ? 0.0 : std::clamp(f, 0.0, 1.0) * (kStops.size() - 1);
    const auto i = std::min(static_cast<std::size_t>(t), kStops.size() - 2);
    const double w = t - static_cast<double>(i);
    const auto &a = kStops[i];
    const auto &b = kStops[i + 1];
    return {channel(a[0] + w * (b[0] - a[0])), channel(a[1] + w * (b[1] - a[1])),
            channel(a[2] + w * (b[2] - a[2]))};
}

Rgb diverging_color(double value) {
    const double v = std::isnan(value) ? 0.0 : std::clamp(value, -1.0, 1.0);
    const std::uint8_t fade = channel(255.0 * (1.0 - std::abs(v)));
    if (v >= 0.0) {
        return {255, fade, fade};
    }
    return {fade, fade, 255};
}

std::vector<std::pair<int, int>> executed_boundary(const BenchmarkMatrix &matrix) {
    const std::size_t cols = matrix.depths.size();
    std::vector<std::pair<int, int>> points;
    auto push = [&](int x, int y) {
        if (points.empty() || points.back() != std::pair{x, y}) {
            points.emplace_back(x, y);
        }
    };
    for (std::size_t r = 0; r < matrix.qubits.size(); ++r) {
        int executed = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (matrix.cells[r * cols + c].status != CellStatus::Skipped) {
                executed = static_cast<int>(c) + 1;
            }
        }
        push(executed, static_cast<int>(r));
        push(executed, static_cast<int>(r) + 1);
    }
    return points;
}

std::string render_matrix_heatmap(const BenchmarkMatrix &matrix, const ReportStyle &style) {
    if (matrix.qubits.empty() || matrix.depths.empty()) {
        fail(Errc::InvalidArgument, "cannot render an empty matrix");
    }
    const Grid g{static_cast<int>(matrix.qubits.size()), static_cast<int>(matrix.depths.size()),
                 style};
    std::string out = open_svg(g.width(), g.height());
    out += "<g class=\"cells\">\n";
    for (int r = 0; r < g.rows; ++r) {
        for (int c = 0; c < g.cols; ++c) {
            const CellResult &cell = matrix.cells[static_cast<std::size_t>(r * g.cols + c)];
            Rgb fill = kSkippedWhite;
            if (cell.status == CellStatus::NonIdentified) {
                fill = kNonIdentifiedGray;
            } else if (cell.status == CellStatus::Identified) {
                fill = sequential_color(cell.mean_f.value_or(0.0));
            }
            out += rect(g.x(c), g.y_top(r), style.cell, style.cell, fill,
                        " stroke=\"#ffffff\" stroke-width=\"0.5\" data-n=\"" +
                            std::to_string(cell.n) + "\" data-d=\"" + std::to_string(cell.d) +
                            "\" data-status=\"" + to_string(cell.status) + "\"");
        }
    }
    out += "</g>\n";
    out += rect(g.x(0), g.y_line(g.rows), g.cols * style.cell, g.rows * style.cell, Rgb{},
                " fill-opacity=\"0\" stroke=\"#888888\" stroke-width=\"0.5\"");
    std::string pts;
    for (const auto &[x, y] : executed_boundary(matrix)) {
        if (!pts.empty()) {
            pts += ' ';
        }
        pts += fmt("%.1f", g.x(x)) + "," + fmt("%.1f", g.y_line(y));
    }
    out += "<polyline class=\"boundary\" points=\"" + pts +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    out += axes(g, matrix.qubits, matrix.depths);
    out += color_bar(g, 0.0, 1.0, sequential_color, "mean f");
    const double lx = g.x(g.cols) + 20;
    double ly = style.margin_top + std::max(100.0, g.rows * style.cell * 0.6) + 20;
    const std::array<std::pair<Rgb, const char *>, 3> swatches{{
        {sequential_color(0.5), "identified"},
        {kNonIdentifiedGray, "not identified"},
        {kSkippedWhite, "skipped"},
    }};
    out += "<g class=\"status-legend\">\n";
    for (const auto &[color, label] : swatches) {
        out += rect(lx, ly, 12, 12, color, " stroke=\"#888888\" stroke-width=\"0.5\"");
        out += text_at(lx + 18, ly + 10, label);
        ly += 18;
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string render_delta_heatmap(const DeltaGrid &delta, const ReportStyle &style) {
    if (delta.qubits.empty() || delta.depths.empty()) {
        fail(Errc::InvalidArgument, "cannot render an empty delta grid");
    }
    const Grid g{static_cast<int>(delta.qubits.size()), static_cast<int>(delta.depths.size()),
                 style};
    std::string out = open_svg(g.width(), g.height());
    out += "<g class=\"cells\">\n";
    for (int r = 0; r < g.rows; ++r) {
        for (int c = 0; c < g.cols; ++c) {
            const auto &v = delta.values[static_cast<std::size_t>(r * g.cols + c)];
            const std::string where = " data-n=\"" + std::to_string(delta.qubits[static_cast<std::size_t>(r)]) +
                                      "\" data-d=\"" + std::to_string(delta.depths[static_cast<std::size_t>(c)]) + "\"";
            if (v) {
                out += rect(g.x(c), g.y_top(r), style.cell, style.cell, diverging_color(*v),
                            " stroke=\"#dddddd\" stroke-width=\"0.5\"" + where + " data-value=\"" +
                                fmt("%.6f", *v) + "\"");
            } else {
                out += "<rect x=\"" + fmt("%.1f", g.x(c)) + "\" y=\"" + fmt("%.1f", g.y_top(r)) +
                       "\" width=\"" + fmt("%.1f", style.cell) + "\" height=\"" +
                       fmt("%.1f", style.cell) +
                       "\" fill=\"none\" stroke=\"#dddddd\" stroke-width=\"0.5\"" + where + "/>\n";
            }
        }
    }
    out += "</g>\n";
    out += axes(g, delta.qubits, delta.depths);
    out += color_bar(g, -1.0, 1.0, diverging_color, "delta f");
    out += "</svg>\n";
    return out;
}

namespace {

struct Bar {
    std::uint64_t index;
    std::uint64_t count;
};

std::vector<Bar> histogram_bars(const ShotHistogram &hist, const BitString &target, int top_k) {
    if (hist.shots == 0 || hist.counts.empty()) {
        fail(Errc::InvalidArgument, "cannot render an empty histogram");
    }
    if (top_k < 1) {
        fail(Errc::InvalidArgument, "top_k must be at least 1");
    }
    if (target.size() != hist.num_qubits) {
        fail(Errc::InvalidArgument, "target length does not match the histogram");
    }
    std::vector<Bar> bars;
    for (const auto &[index, count] : hist.counts) {
        bars.push_back({index, count});
    }
    std::stable_sort(bars.begin(), bars.end(),
                     [](const Bar &a, const Bar &b) { return a.count > b.count; });
    if (bars.size() > static_cast<std::size_t>(top_k)) {
        bars.resize(static_cast<std::size_t>(top_k));
    }
    const bool has_target = std::any_of(bars.begin(), bars.end(), [&](const Bar &b) {
        return b.index == target.index();
    });
    if (!has_target) {
        bars.push_back({target.index(), hist.count(target.index())});
    }
    return bars;
}

} // namespace

std::string render_histogram(const ShotHistogram &hist, const BitString &target, int top_k,
                             const ReportStyle &style) {
    const auto bars = histogram_bars(hist, target, top_k);
    const double plot_h = 200.0;
    const double bar_w = std::max(style.cell, 8 * hist.num_qubits);
    const double base = style.margin_top + plot_h;
    const int width = style.margin_left + static_cast<int>(bars.size() * bar_w) + 20;
    const int height = static_cast<int>(base) + 20 + 7 * hist.num_qubits + 30;
    std::uint64_t tallest = 0;
    for (const auto &b : bars) {
        tallest = std::max(tallest, b.count);
    }
    std::string out = open_svg(width, height);
    if (!style.title.empty()) {
        out += text_at(style.margin_left, 20, style.title, " class=\"title\" font-size=\"14\"");
    }
    out += "<g class=\"bars\">\n";
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const auto &b = bars[i];
        const bool is_target = b.index == target.index();
        const double h = tallest == 0 ? 0.0 : plot_h * static_cast<double>(b.count) /
                                                  static_cast<double>(tallest);
        const double x = style.margin_left + i * bar_w;
        const std::string bits = BitString(hist.num_qubits, b.index).str();
        const double freq = static_cast<double>(b.count) / static_cast<double>(hist.shots);
        out += rect(x + 2, base - h, bar_w - 4, h, is_target ? kTargetRed : kBarBlue,
                    " class=\"bar\" data-bits=\"" + bits + "\" data-count=\"" +
                        std::to_string(b.count) + "\" data-target=\"" +
                        (is_target ? "true" : "false") + "\"");
        out += text_at(x + bar_w / 2, base - h - 4, fmt("%.4f", freq),
                       " class=\"freq\" text-anchor=\"middle\" font-size=\"9\"");
        const double lx = x + bar_w / 2;
        const double ly = base + 8;
        out += "<text x=\"" + fmt("%.1f", lx) + "\" y=\"" + fmt("%.1f", ly) +
               "\" font-family=\"monospace\" font-size=\"9\" text-anchor=\"end\" transform=\"rotate(-90 " +
               fmt("%.1f", lx) + " " + fmt("%.1f", ly) + ")\">" + bits + "</text>\n";
    }
    out += "</g>\n";
    out += "<line x1=\"" + fmt("%.1f", style.margin_left) + "\" y1=\"" + fmt("%.1f", base) +
           "\" x2=\"" + fmt("%.1f", width - 20.0) + "\" y2=\"" + fmt("%.1f", base) +
           "\" stroke=\"#000000\"/>\n";
    out += "<text class=\"axis-label\" x=\"14\" y=\"" + fmt("%.1f", style.margin_top + plot_h / 2) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
           fmt("%.1f", style.margin_top + plot_h / 2) + ")\">frequency</text>\n";
    out += "</svg>\n";
    return out;
}

std::string histogram_csv(const ShotHistogram &hist, const BitString &target, int top_k) {
    std::ostringstream os;
    os.precision(17);
    os << "bits,count,frequency,is_target\n";
    for (const auto &b : histogram_bars(hist, target, top_k)) {
        os << BitString(hist.num_qubits, b.index).str() << ',' << b.count << ','
           << static_cast<double>(b.count) / static_cast<double>(hist.shots) << ','
           << (b.index == target.index() ? 1 : 0) << '\n';
    }
    return os.str();
}

} // namespace prc
