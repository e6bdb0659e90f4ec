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
#include "prc/report.hpp"

#include "support/xml_check.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

using namespace prc;

namespace {

BenchmarkMatrix synthetic(const std::vector<int> &qubits, const std::vector<int> &depths,
                          const std::function<CellStatus(int, int)> &status) {
    BenchmarkMatrix m;
    m.qubits = qubits;
    m.depths = depths;
    for (int n : qubits) {
        for (int d : depths) {
            CellResult c;
            c.n = n;
            c.d = d;
            c.status = status(n, d);
            if (c.status == CellStatus::Identified) {
                c.mean_f = std::fmod(0.037 * n * d, 1.0);
                c.identified_reps = 5;
            }
            m.cells.push_back(c);
        }
    }
    return m;
}

std::vector<test::XmlElement> with_class(const test::XmlScan &scan, const std::string &name,
                                         const std::string &cls) {
    std::vector<test::XmlElement> out;
    for (const auto &e : scan.elements) {
        auto it = e.attrs.find("class");
        if (e.name == name && it != e.attrs.end() && it->second == cls) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<test::XmlElement> cell_rects(const test::XmlScan &scan) {
    std::vector<test::XmlElement> out;
    for (const auto &e : scan.elements) {
        if (e.name == "rect" && e.attrs.count("data-n") != 0) {
            out.push_back(e);
        }
    }
    return out;
}

std::string hex_of(double r, double g, double b) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(r)),
                  static_cast<int>(std::lround(g)), static_cast<int>(std::lround(b)));
    return buf;
}

// Piecewise-linear viridis anchors, written out independently of the renderer.
std::string reference_sequential(double f) {
    const double anchors[5][3] = {{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98},
                                  {253, 231, 37}};
    const double t = f * 4.0;
    int i = static_cast<int>(std::floor(t));
    if (i >= 4) {
        i = 3;
    }
    const double w = t - i;
    return hex_of(anchors[i][0] + w * (anchors[i + 1][0] - anchors[i][0]),
                  anchors[i][1] + w * (anchors[i + 1][1] - anchors[i][1]),
                  anchors[i][2] + w * (anchors[i + 1][2] - anchors[i][2]));
}

std::string reference_diverging(double v) {
    const double fade = 255.0 * (1.0 - std::abs(v));
    return v >= 0 ? hex_of(255, fade, fade) : hex_of(fade, fade, 255);
}

double luminance(const Rgb &c) { return 0.2126 * c.r + 0.7152 * c.g + 0.0722 * c.b; }

} // namespace

TEST_CASE("color maps", "[report]") {
    SECTION("sequential endpoints and interior") {
        CHECK(sequential_color(0.0).hex() == "#440154");
        CHECK(sequential_color(1.0).hex() == "#fde725");
        for (int i = 0; i <= 100; ++i) {
            CHECK(sequential_color(i / 100.0).hex() == reference_sequential(i / 100.0));
        }
        CHECK(sequential_color(-0.5) == sequential_color(0.0));
        CHECK(sequential_color(3.0) == sequential_color(1.0));
    }
    SECTION("sequential luminance is monotone") {
        for (int i = 0; i < 100; ++i) {
            CHECK(luminance(sequential_color(i / 100.0)) <=
                  luminance(sequential_color((i + 1) / 100.0)));
        }
    }
    SECTION("diverging") {
        CHECK(diverging_color(0.0).hex() == "#ffffff");
        CHECK(diverging_color(1.0).hex() == "#ff0000");
        CHECK(diverging_color(-1.0).hex() == "#0000ff");
        CHECK(diverging_color(2.0) == diverging_color(1.0));
        for (int i = 0; i < 100; ++i) {
            // Saturation grows with |v| on each side.
            CHECK(diverging_color(i / 100.0).g >= diverging_color((i + 1) / 100.0).g);
            CHECK(diverging_color(-i / 100.0).r >= diverging_color(-(i + 1) / 100.0).r);
        }
    }
}

TEST_CASE("render_matrix_heatmap", "[report]") {
    SECTION("single identified cell at f = 0") {
        BenchmarkMatrix m = synthetic({2}, {2}, [](int, int) { return CellStatus::Identified; });
        m.cells[0].mean_f = 0.0;
        const auto scan = test::scan_xml(render_matrix_heatmap(m));
        REQUIRE(scan.well_formed);
        const auto cells = cell_rects(scan);
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].attrs.at("fill") == sequential_color(0.0).hex());
    }
    SECTION("all skipped is white with the boundary at the left edge") {
        const auto m = synthetic({2, 3, 4}, {2, 3, 4, 5}, [](int, int) { return CellStatus::Skipped; });
        const ReportStyle style;
        const auto scan = test::scan_xml(render_matrix_heatmap(m, style));
        REQUIRE(scan.well_formed);
        for (const auto &c : cell_rects(scan)) {
            CHECK(c.attrs.at("fill") == "#ffffff");
        }
        const auto lines = with_class(scan, "polyline", "boundary");
        REQUIRE(lines.size() == 1);
        std::istringstream pts(lines[0].attrs.at("points"));
        std::string p;
        while (pts >> p) {
            CHECK(std::stod(p.substr(0, p.find(','))) == Catch::Approx(style.margin_left));
        }
    }
    SECTION("status colors") {
        const auto m = synthetic({2, 3}, {2, 3, 4}, [](int n, int d) {
            if (d == 4) {
                return CellStatus::Skipped;
            }
            return n + d == 5 ? CellStatus::NonIdentified : CellStatus::Identified;
        });
        const auto scan = test::scan_xml(render_matrix_heatmap(m));
        REQUIRE(scan.well_formed);
        for (const auto &c : cell_rects(scan)) {
            const auto &cell = m.at(std::stoi(c.attrs.at("data-n")), std::stoi(c.attrs.at("data-d")));
            CAPTURE(cell.n, cell.d);
            switch (cell.status) {
            case CellStatus::Identified:
                CHECK(c.attrs.at("fill") == reference_sequential(*cell.mean_f));
                break;
            case CellStatus::NonIdentified:
                CHECK(c.attrs.at("fill") == "#d3d3d3");
                break;
            case CellStatus::Skipped:
                CHECK(c.attrs.at("fill") == "#ffffff");
                break;
            }
        }
    }
    SECTION("diagonal boundary matches the cell classification") {
        // Rows execute a prefix that shrinks with n, like a skip staircase.
        std::vector<int> qubits{2, 3, 4, 5, 6, 7};
        std::vector<int> depths{2, 3, 4, 5, 6, 7, 8, 9};
        const auto m = synthetic(qubits, depths, [](int n, int d) {
            if (d > 13 - n) {
                return CellStatus::Skipped;
            }
            return d + n <= 9 ? CellStatus::Identified : CellStatus::NonIdentified;
        });
        const ReportStyle style;
        const auto scan = test::scan_xml(render_matrix_heatmap(m, style));
        REQUIRE(scan.well_formed);
        // Independently: per row (identified by its rect y), the right edge of
        // the last executed rect; stitch rows bottom-up into a staircase.
        std::map<double, double, std::greater<>> right_edge; // y -> x, bottom row first
        for (const auto &c : cell_rects(scan)) {
            const double y = std::stod(c.attrs.at("y"));
            const double x = std::stod(c.attrs.at("x"));
            const double w = std::stod(c.attrs.at("width"));
            auto &edge = right_edge.try_emplace(y, static_cast<double>(style.margin_left)).first->second;
            if (c.attrs.at("data-status") != "skipped") {
                edge = std::max(edge, x + w);
            }
        }
        std::vector<std::pair<double, double>> expected;
        for (const auto &[y, x] : right_edge) {
            for (double yy : {y + style.cell, y}) {
                if (expected.empty() || expected.back() != std::pair{x, yy}) {
                    expected.emplace_back(x, yy);
                }
            }
        }
        std::vector<std::pair<double, double>> got;
        std::istringstream pts(with_class(scan, "polyline", "boundary").at(0).attrs.at("points"));
        std::string p;
        while (pts >> p) {
            const auto comma = p.find(',');
            got.emplace_back(std::stod(p.substr(0, comma)), std::stod(p.substr(comma + 1)));
        }
        CHECK(got == expected);
    }
    SECTION("legend and axes are present") {
        const auto m = synthetic({2, 3}, {2, 3}, [](int, int) { return CellStatus::Identified; });
        const std::string svg = render_matrix_heatmap(m);
        CHECK(svg.find("depth d") != std::string::npos);
        CHECK(svg.find("qubits n") != std::string::npos);
        CHECK(svg.find("not identified") != std::string::npos);
        CHECK(svg.find("skipped") != std::string::npos);
        CHECK(svg.find("class=\"legend\"") != std::string::npos);
    }
    SECTION("byte-stable and escaped title") {
        const auto m = synthetic({2, 3}, {2, 3}, [](int, int) { return CellStatus::Identified; });
        ReportStyle style;
        style.title = "noise <p2> & readout";
        const std::string a = render_matrix_heatmap(m, style);
        CHECK(a == render_matrix_heatmap(m, style));
        CHECK(test::scan_xml(a).well_formed);
    }
    SECTION("empty matrix") {
        CHECK_THROWS_AS(render_matrix_heatmap(BenchmarkMatrix{}), Error);
    }
}

TEST_CASE("render_delta_heatmap", "[report]") {
    SECTION("all zero is white") {
        DeltaGrid g{{2, 3}, {2, 3, 4}, std::vector<std::optional<double>>(6, 0.0)};
        const auto scan = test::scan_xml(render_delta_heatmap(g));
        REQUIRE(scan.well_formed);
        const auto cells = cell_rects(scan);
        REQUIRE(cells.size() == 6);
        for (const auto &c : cells) {
            CHECK(c.attrs.at("fill") == "#ffffff");
        }
    }
    SECTION("mixed values follow the reference ramp; absent cells uncolored") {
        DeltaGrid g{{2, 3, 4}, {2, 3, 4}, {1.0, -1.0, 0.25, -0.6, std::nullopt, 0.999, -0.001, 0.5, std::nullopt}};
        const auto scan = test::scan_xml(render_delta_heatmap(g));
        REQUIRE(scan.well_formed);
        for (const auto &c : cell_rects(scan)) {
            const auto v = g.at(std::stoi(c.attrs.at("data-n")), std::stoi(c.attrs.at("data-d")));
            if (v) {
                CHECK(c.attrs.at("fill") == reference_diverging(*v));
            } else {
                CHECK(c.attrs.at("fill") == "none");
            }
        }
        CHECK(render_delta_heatmap(g) == render_delta_heatmap(g));
    }
    SECTION("empty grid") {
        CHECK_THROWS_AS(render_delta_heatmap(DeltaGrid{}), Error);
    }
}

TEST_CASE("render_histogram", "[report]") {
    const BitString target = BitString::parse("101");
    SECTION("point mass") {
        ShotHistogram h{3, 100, {{target.index(), 100}}};
        const auto scan = test::scan_xml(render_histogram(h, target, 8));
        REQUIRE(scan.well_formed);
        const auto bars = with_class(scan, "rect", "bar");
        REQUIRE(bars.size() == 1);
        CHECK(bars[0].attrs.at("data-target") == "true");
        CHECK(bars[0].attrs.at("fill") == kTargetRed.hex());
        CHECK(std::stod(bars[0].attrs.at("height")) == Catch::Approx(200.0));
    }
    SECTION("identified: highlighted bar is tallest") {
        ShotHistogram h{3, 100, {{target.index(), 50}, {0, 30}, {7, 20}}};
        const auto bars = with_class(test::scan_xml(render_histogram(h, target, 8)), "rect", "bar");
        REQUIRE(bars.size() == 3);
        CHECK(bars[0].attrs.at("data-target") == "true");
        CHECK(bars[0].attrs.at("data-bits") == "101");
        for (const auto &b : bars) {
            CHECK(std::stod(b.attrs.at("height")) <= std::stod(bars[0].attrs.at("height")));
        }
    }
    SECTION("not identified: highlighted bar is not tallest") {
        ShotHistogram h{3, 100, {{target.index(), 20}, {0, 50}, {7, 30}}};
        const auto bars = with_class(test::scan_xml(render_histogram(h, target, 8)), "rect", "bar");
        REQUIRE(bars.size() == 3);
        CHECK(bars[0].attrs.at("data-target") == "false");
        for (const auto &b : bars) {
            if (b.attrs.at("data-target") == "true") {
                CHECK(std::stod(b.attrs.at("height")) < std::stod(bars[0].attrs.at("height")));
            }
        }
    }
    SECTION("top_k truncation keeps the target") {
        ShotHistogram h{3, 100, {{0, 40}, {1, 30}, {2, 20}, {target.index(), 10}}};
        const auto bars = with_class(test::scan_xml(render_histogram(h, target, 2)), "rect", "bar");
        REQUIRE(bars.size() == 3);
        CHECK(bars[2].attrs.at("data-target") == "true");
        CHECK(histogram_csv(h, target, 2) ==
              "bits,count,frequency,is_target\n000,40,0.40000000000000002,0\n"
              "100,30,0.29999999999999999,0\n101,10,0.10000000000000001,1\n");
    }
    SECTION("frequencies are labeled") {
        ShotHistogram h{3, 4, {{target.index(), 3}, {0, 1}}};
        const std::string svg = render_histogram(h, target, 8);
        CHECK(svg.find(">0.7500<") != std::string::npos);
        CHECK(svg.find(">0.2500<") != std::string::npos);
    }
    SECTION("empty histogram") {
        CHECK_THROWS_AS(render_histogram(ShotHistogram{3, 0, {}}, target, 8), Error);
    }
}
