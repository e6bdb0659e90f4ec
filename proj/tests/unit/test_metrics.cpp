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
#include "prc/matrix.hpp"
#include "prc/metrics.hpp"
#include "prc/profile.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace prc;

namespace {

ShotHistogram hist3(std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> counts) {
    ShotHistogram h{3, 0, counts};
    for (const auto &[k, v] : h.counts) {
        h.shots += v;
    }
    return h;
}

Errc code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::Io;
}

BenchmarkMatrix grid_matrix(const std::vector<std::optional<double>> &f) {
    BenchmarkMatrix m;
    m.qubits = {2, 3};
    m.depths = {2, 3};
    std::size_t i = 0;
    for (int n : m.qubits) {
        for (int d : m.depths) {
            CellResult c;
            c.n = n;
            c.d = d;
            c.mean_f = f[i];
            c.status = f[i] ? CellStatus::Identified : CellStatus::NonIdentified;
            m.cells.push_back(c);
            ++i;
        }
    }
    return m;
}

} // namespace

TEST_CASE("identify", "[metrics]") {
    const BitString t = BitString::parse("101");
    CHECK(identify(hist3({{t.index(), 100}}), t));
    CHECK_FALSE(identify(hist3({{t.index(), 50}, {0, 50}}), t));
    CHECK_FALSE(identify(hist3({{t.index(), 10}, {3, 70}, {0, 20}}), t));
    CHECK_FALSE(identify(hist3({{0, 10}}), t));
    CHECK(code_of([&] { (void)identify(ShotHistogram{3, 0, {}}, t); }) == Errc::InvalidArgument);
}

TEST_CASE("relative_peakedness", "[metrics]") {
    const BitString t = BitString::parse("110");
    CHECK(relative_peakedness(hist3({{t.index(), 100}}), t) == 1.0);
    CHECK(relative_peakedness(hist3({{t.index(), 60}, {0, 20}, {1, 20}}), t) ==
          Catch::Approx(0.5).margin(1e-15));
    CHECK(relative_peakedness(hist3({{t.index(), 20}, {0, 60}, {1, 20}}), t) ==
          Catch::Approx(-0.5).margin(1e-15));
    CHECK(relative_peakedness(hist3({{0, 5}}), t) == -1.0);
    SECTION("undefined when both frequencies vanish") {
        // Only reachable through a record whose listed counts are all zero.
        CHECK(code_of([&] { (void)relative_peakedness(ShotHistogram{3, 10, {{5, 0}}}, t); }) ==
              Errc::UndefinedMetric);
    }
    SECTION("empty histogram") {
        CHECK(code_of([&] { (void)relative_peakedness(ShotHistogram{3, 0, {}}, t); }) ==
              Errc::InvalidArgument);
    }
}

TEST_CASE("fidelity_error", "[metrics]") {
    CHECK(fidelity_error(0.9, 0.9) == 0.0);
    CHECK(fidelity_error(0.0, 0.7) == 1.0);
    CHECK(fidelity_error(0.5, 0.9995) == Catch::Approx(0.4998).margin(1e-4));
    CHECK(fidelity_error(1.0, 0.9) < 0.0);
    CHECK(clamp_unit(fidelity_error(1.0, 0.9)) == 0.0);
    CHECK(clamp_unit(1.7) == 1.0);
    CHECK(code_of([] { (void)fidelity_error(0.5, 0.0); }) == Errc::InvalidArgument);
    CHECK(code_of([] { (void)fidelity_error(0.5, -0.1); }) == Errc::InvalidArgument);
    for (int i = 0; i < 20; ++i) {
        CHECK(fidelity_error(-1.0 + 0.1 * i, 0.95) > fidelity_error(-1.0 + 0.1 * (i + 1), 0.95));
    }
}

TEST_CASE("run_metrics properties", "[metrics]") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint64_t> count(0, 50);
    std::uniform_int_distribution<std::uint64_t> mask(0, 31);
    for (int trial = 0; trial < 200; ++trial) {
        ShotHistogram h{5, 0, {}};
        for (std::uint64_t k = 0; k < 32; ++k) {
            if (const auto c = count(rng); c > 0) {
                h.counts[k] = c;
                h.shots += c;
            }
        }
        if (h.shots == 0) {
            continue;
        }
        const BitString target(5, mask(rng));
        const double c_max = 0.99;
        const RunMetrics m = run_metrics(h, target, c_max);
        CHECK(m.c_exp >= -1.0);
        CHECK(m.c_exp <= 1.0);
        if (m.identified) {
            CHECK(m.c_exp >= 0.0);
        }
        CHECK(m.f == clamp_unit(m.f_raw));

        // Scaling every count leaves every metric unchanged.
        ShotHistogram scaled = h;
        scaled.shots *= 7;
        for (auto &[k, v] : scaled.counts) {
            v *= 7;
        }
        CHECK(run_metrics(scaled, target, c_max) == m);

        // XOR relabeling of outcomes and target.
        const BitString s(5, mask(rng));
        ShotHistogram relabeled{5, h.shots, {}};
        for (const auto &[k, v] : h.counts) {
            relabeled.counts[k ^ s.index()] = v;
        }
        CHECK(run_metrics(relabeled, target ^ s, c_max) == m);
    }
}

TEST_CASE("run_metrics on exact distributions", "[metrics]") {
    const ProbabilityDistribution d{2, {0.1, 0.7, 0.15, 0.05}};
    const RunMetrics m = run_metrics(d, BitString(2, 1), 0.8);
    CHECK(m.identified);
    CHECK(m.p_hat_peak == 0.7);
    CHECK(m.p_hat_second == 0.15);
    CHECK(m.c_exp == Catch::Approx(0.55 / 0.85).epsilon(1e-14));
    CHECK(m.f_raw == Catch::Approx(1.0 - (0.55 / 0.85) / 0.8).epsilon(1e-14));
    CHECK_FALSE(run_metrics(d, BitString(2, 2), 0.8).identified);
}

TEST_CASE("delta_matrix", "[metrics]") {
    SECTION("identical matrices give zeros") {
        const auto a = grid_matrix({0.1, 0.2, 0.3, 0.4});
        const DeltaGrid g = delta_matrix(a, a);
        for (const auto &v : g.values) {
            REQUIRE(v.has_value());
            CHECK(*v == 0.0);
        }
    }
    SECTION("sign follows argument order; absent unless identified in both") {
        const auto a = grid_matrix({0.3, std::nullopt, 0.9, 0.0});
        const auto b = grid_matrix({0.5, 0.2, std::nullopt, 1.0});
        const DeltaGrid g = delta_matrix(a, b);
        CHECK(*g.at(2, 2) == Catch::Approx(-0.2).margin(1e-15));
        CHECK_FALSE(g.at(2, 3).has_value());
        CHECK_FALSE(g.at(3, 2).has_value());
        CHECK(*g.at(3, 3) == -1.0);
        CHECK(*delta_matrix(b, a).at(2, 2) == Catch::Approx(0.2).margin(1e-15));
        CHECK(delta_csv(g) == "n,d,delta_f\n2,2,-0.20000000000000001\n2,3,\n3,2,\n3,3,-1\n");
    }
    SECTION("mismatched domains") {
        auto a = grid_matrix({0.1, 0.2, 0.3, 0.4});
        auto b = a;
        b.depths = {2, 4};
        CHECK(code_of([&] { (void)delta_matrix(a, b); }) == Errc::DomainMismatch);
    }
}

TEST_CASE("peak dominance identity", "[metrics]") {
    // C_max = (R_p - 1) / (R_p + 1) for a profile whose p_second is p_peak / R_p.
    for (double rp : {14.0, 139.0, 3840.0, 9990.0}) {
        const double c = c_max_from_dominance(rp);
        CHECK(c == Catch::Approx((rp - 1) / (rp + 1)).epsilon(1e-15));
        const double peak = rp / (rp + 1);
        const auto profile = profile_of({peak, 1.0 - peak, 0.0, 0.0}, BitString(2, 0));
        CHECK(profile.r_p == Catch::Approx(rp).epsilon(1e-12));
        CHECK(profile.c_max == Catch::Approx(c).epsilon(1e-12));
    }
}
