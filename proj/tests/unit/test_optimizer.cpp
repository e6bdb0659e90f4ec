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
#include "prc/circuit.hpp"
#include "prc/error.hpp"
#include "prc/optimizer.hpp"
#include "prc/profile.hpp"

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

using namespace prc;

namespace {

OptimizerConfig small_budget() {
    OptimizerConfig cfg;
    cfg.stage1_iters = 300;
    cfg.stage2_iters = 300;
    return cfg;
}

} // namespace

TEST_CASE("objective", "[optimizer]") {
    SECTION("mirror inverse") {
        const Circuit c =
            build_exact_inverse_peaking(derive_subcircuit(build_reference_circuit(6, 8, 1), 6, 8));
        CHECK(objective(c) == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("empty peaking half reduces to the random half") {
        const Circuit full = derive_subcircuit(build_reference_circuit(4, 6, 2), 4, 6);
        std::vector<Layer> layers = full.layers();
        for (std::size_t l = static_cast<std::size_t>(full.random_depth()); l < layers.size(); ++l) {
            layers[l].clear();
        }
        const Circuit c(4, 6, layers, BitString::parse("1010"));
        CHECK(objective(c) ==
              Catch::Approx(test::brute_force_peak_probability(c)).margin(1e-14));
    }
    SECTION("unoptimized (10, 20) cells sit near the uniform level") {
        double mean = 0.0;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const double p = objective(derive_subcircuit(build_reference_circuit(10, 20, seed), 10, 20));
            CHECK(p > 0.0);
            CHECK(p < 1.0);
            mean += p / 10.0;
        }
        const double uniform = 1.0 / 1024.0;
        CHECK(mean > uniform / 10.0);
        CHECK(mean < uniform * 10.0);
    }
}

TEST_CASE("optimize", "[optimizer]") {
    SECTION("exact inverse returns immediately") {
        const Circuit c =
            build_exact_inverse_peaking(derive_subcircuit(build_reference_circuit(5, 6, 4), 5, 6));
        const auto r = optimize(c, OptimizerConfig{});
        CHECK(r.trace.converged);
        CHECK(r.trace.stage1_iterations == 0);
        CHECK(r.trace.stage2_iterations == 0);
        CHECK(r.trace.final_value == Catch::Approx(1.0).margin(1e-12));
        CHECK(r.circuit == c);
    }
    SECTION("two qubits, depth two") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Circuit c = derive_subcircuit(build_reference_circuit(2, 2, seed), 2, 2);
            const auto r = optimize(c, small_budget());
            CAPTURE(seed);
            CHECK(objective(r.circuit) >= 0.999);
        }
    }
    SECTION("random half untouched, trace monotone, deterministic") {
        const Circuit c = derive_subcircuit(build_reference_circuit(6, 9, 8), 6, 9);
        const auto r = optimize(c, small_budget());
        for (int l = 0; l < c.random_depth(); ++l) {
            CHECK(r.circuit.layers()[static_cast<std::size_t>(l)] ==
                  c.layers()[static_cast<std::size_t>(l)]);
        }
        REQUIRE(r.trace.values.size() == r.trace.best_so_far.size());
        for (std::size_t i = 1; i < r.trace.best_so_far.size(); ++i) {
            REQUIRE(r.trace.best_so_far[i] >= r.trace.best_so_far[i - 1]);
        }
        CHECK(r.trace.final_value >= r.trace.initial);
        CHECK(objective(r.circuit) == Catch::Approx(r.trace.final_value).margin(1e-14));
        CHECK(r.trace.final_value > 0.9);

        const auto again = optimize(c, small_budget());
        CHECK(again.circuit == r.circuit);
        CHECK(again.trace.values == r.trace.values);
    }
    SECTION("targets other than all-zero") {
        const Circuit c = retarget(derive_subcircuit(build_reference_circuit(5, 8, 3), 5, 8),
                                   BitString::parse("11010"));
        const auto r = optimize(c, small_budget());
        CHECK(r.trace.final_value > 0.99);
        CHECK(r.circuit.target() == BitString::parse("11010"));
    }
    SECTION("zero budgets leave the circuit unchanged") {
        OptimizerConfig cfg;
        cfg.stage1_iters = 0;
        cfg.stage2_iters = 0;
        const Circuit c = derive_subcircuit(build_reference_circuit(4, 4, 3), 4, 4);
        const auto r = optimize(c, cfg);
        CHECK(r.circuit == c);
        CHECK(r.trace.final_value == r.trace.initial);
    }
    SECTION("nothing to optimize") {
        try {
            (void)optimize(Circuit::empty(3, 2), OptimizerConfig{});
            FAIL("expected error");
        } catch (const Error &e) {
            CHECK(e.code() == Errc::NothingToOptimize);
        }
    }
    SECTION("invalid configuration") {
        OptimizerConfig cfg;
        cfg.adam_step = 0.0;
        CHECK_THROWS_AS(cfg.validate(), Error);
        cfg = OptimizerConfig{};
        cfg.stage1_iters = -1;
        CHECK_THROWS_AS(cfg.validate(), Error);
    }
}

TEST_CASE("peak profile", "[optimizer]") {
    SECTION("dominance to best-case peakedness") {
        CHECK(c_max_from_dominance(3840.0) == Catch::Approx(0.9995).margin(5e-5));
        CHECK(c_max_from_dominance(9990.0) == Catch::Approx(0.9998).margin(5e-5));
        CHECK(c_max_from_dominance(std::numeric_limits<double>::infinity()) == 1.0);
    }
    SECTION("point mass") {
        const PeakProfile p = profile_of({0.0, 0.0, 1.0, 0.0}, BitString(2, 2));
        CHECK(p.p_peak == 1.0);
        CHECK(p.p_second == 0.0);
        CHECK(std::isinf(p.r_p));
        CHECK(p.c_max == 1.0);
        CHECK(!p.target_mismatch);
    }
    SECTION("field identities") {
        const PeakProfile p = profile_of({0.1, 0.6, 0.2, 0.1}, BitString(2, 1));
        CHECK(p.p_peak == 0.6);
        CHECK(p.p_second == 0.2);
        CHECK(p.r_p == Catch::Approx(3.0));
        CHECK(p.c_max == Catch::Approx(0.5));
        CHECK(p.c_max == Catch::Approx(c_max_from_dominance(p.r_p)));
    }
    SECTION("target mismatch is flagged") {
        const PeakProfile p = profile_of({0.1, 0.6, 0.2, 0.1}, BitString(2, 2));
        CHECK(p.target_mismatch);
        CHECK(p.argmax == BitString(2, 1));
        CHECK(p.p_target == 0.2);
    }
    SECTION("circuit profile of a retargeted mirror") {
        const Circuit c = retarget(
            build_exact_inverse_peaking(derive_subcircuit(build_reference_circuit(4, 4, 1), 4, 4)),
            BitString::parse("0110"));
        const PeakProfile p = peak_profile(c);
        CHECK(p.argmax == BitString::parse("0110"));
        CHECK(p.p_peak == Catch::Approx(1.0).margin(1e-12));
        CHECK(!p.target_mismatch);
    }
    SECTION("JSON round trip, including infinite dominance") {
        const PeakProfile a = profile_of({0.1, 0.6, 0.2, 0.1}, BitString(2, 2));
        CHECK(profile_from_json(nlohmann::json::parse(profile_to_json(a).dump())) == a);
        const PeakProfile b = profile_of({0.0, 1.0}, BitString(1, 1));
        const PeakProfile back = profile_from_json(nlohmann::json::parse(profile_to_json(b).dump()));
        CHECK(std::isinf(back.r_p));
        CHECK(back.c_max == 1.0);
    }
}
