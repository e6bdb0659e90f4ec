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
#include "prc/gate.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace prc;

namespace {

constexpr double kPi = std::numbers::pi;

GateParams random_params(Rng &rng) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::array<double, GateParams::kSerialized> v{};
    for (auto &x : v) {
        x = angle(rng);
    }
    return GateParams::from_array(v);
}

Mat4 cnot_low_controls_high() {
    Mat4 m = Mat4::Zero();
    // index = low + 2 * high; flip high when low is set.
    m(0, 0) = 1.0;
    m(3, 1) = 1.0;
    m(2, 2) = 1.0;
    m(1, 3) = 1.0;
    return m;
}

Mat4 swap_gate() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = 1.0;
    m(2, 1) = 1.0;
    m(1, 2) = 1.0;
    m(3, 3) = 1.0;
    return m;
}

} // namespace

TEST_CASE("reconstructed gates are unitary", "[gate]") {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        CHECK(unitarity_defect(reconstruct(random_params(rng))) <= 1e-12);
    }
}

TEST_CASE("canonical core matches its defining exponential", "[gate]") {
    // exp(i(aXX + bYY + cZZ)) = product of the three commuting factors,
    // each cos(t) I + i sin(t) P.
    const Mat2 x = pauli_x();
    Mat2 y;
    y << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
    Mat2 z;
    z << 1.0, 0.0, 0.0, -1.0;
    const double a = 0.3, b = -0.7, c = 1.1;
    auto factor = [](double t, const Mat4 &p) {
        return Mat4(std::cos(t) * Mat4::Identity() + Complex(0, std::sin(t)) * p);
    };
    const Mat4 expected = factor(a, kron(x, x)) * factor(b, kron(y, y)) * factor(c, kron(z, z));
    CHECK((canonical_core(a, b, c) - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("haar_random_unitary", "[gate]") {
    SECTION("unitary for seed 0") {
        Rng rng(0);
        CHECK(unitarity_defect(haar_random_unitary(rng)) <= 1e-12);
    }
    SECTION("deterministic per seed") {
        Rng a(11);
        Rng b(11);
        CHECK(haar_random_unitary(a) == haar_random_unitary(b));
    }
    SECTION("trace second moment is one") {
        // For Haar U(N), E|tr U|^2 = 1 and E|tr U|^4 = 2, so the per-draw
        // variance is 1 and the standard error is estimated from the sample.
        Rng rng(2024);
        const int draws = 10000;
        double sum = 0.0;
        double sum_sq = 0.0;
        for (int i = 0; i < draws; ++i) {
            const double t = std::norm(haar_random_unitary(rng).trace());
            sum += t;
            sum_sq += t * t;
        }
        const double mean = sum / draws;
        const double var = sum_sq / draws - mean * mean;
        const double se = std::sqrt(var / draws);
        CHECK(std::abs(mean - 1.0) <= 3.0 * se);
    }
}

TEST_CASE("kak_decompose special gates", "[gate]") {
    SECTION("identity") {
        const GateParams p = kak_decompose(Mat4::Identity());
        CHECK(std::abs(p.xx) < 1e-12);
        CHECK(std::abs(p.yy) < 1e-12);
        CHECK(std::abs(p.zz) < 1e-12);
        CHECK(phase_insensitive_distance(reconstruct(p), Mat4::Identity()) <= 1e-10);
    }
    SECTION("CNOT has Cartan coordinates (pi/4, 0, 0)") {
        const Mat4 cx = cnot_low_controls_high();
        const GateParams p = kak_decompose(cx);
        CHECK(p.xx == Catch::Approx(kPi / 4).margin(1e-10));
        CHECK(std::abs(p.yy) < 1e-10);
        CHECK(std::abs(p.zz) < 1e-10);
        CHECK(phase_insensitive_distance(reconstruct(p), cx) <= 1e-10);
    }
    SECTION("SWAP sits at the chamber corner") {
        const GateParams p = kak_decompose(swap_gate());
        CHECK(p.xx == Catch::Approx(kPi / 4).margin(1e-10));
        CHECK(p.yy == Catch::Approx(kPi / 4).margin(1e-10));
        CHECK(std::abs(p.zz) == Catch::Approx(kPi / 4).margin(1e-10));
        CHECK(phase_insensitive_distance(reconstruct(p), swap_gate()) <= 1e-10);
    }
    SECTION("purely local gate") {
        const Mat4 local = kron(euler_matrix({-1.1, 0.4, 2.5}), euler_matrix({0.3, 1.2, -0.4}));
        const GateParams p = kak_decompose(local);
        CHECK(std::abs(p.xx) + std::abs(p.yy) + std::abs(p.zz) < 1e-9);
        CHECK(phase_insensitive_distance(reconstruct(p), local) <= 1e-10);
    }
    SECTION("non-unitary input") {
        Mat4 bad = Mat4::Identity();
        bad(0, 0) = 2.0;
        try {
            (void)kak_decompose(bad);
            FAIL("expected decomposition failure");
        } catch (const Error &e) {
            CHECK(e.code() == Errc::DecompositionFailure);
        }
    }
}

TEST_CASE("kak_decompose reconstructs Haar gates", "[gate]") {
    SECTION("seed 7") {
        Rng rng(7);
        const Mat4 u = haar_random_unitary(rng);
        const GateParams p = kak_decompose(u);
        CHECK(phase_insensitive_distance(reconstruct(p), u) <= 1e-10);
        CHECK(in_weyl_chamber(p.xx, p.yy, p.zz));
    }
    SECTION("many draws") {
        Rng rng(99);
        for (int i = 0; i < 500; ++i) {
            const Mat4 u = haar_random_unitary(rng);
            const GateParams p = kak_decompose(u);
            REQUIRE(phase_insensitive_distance(reconstruct(p), u) <= 1e-10);
            REQUIRE(in_weyl_chamber(p.xx, p.yy, p.zz));
        }
    }
}

TEST_CASE("kak_decompose inverts reconstruct on canonical parameters", "[gate]") {
    Rng rng(12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        GateParams p = random_params(rng);
        // Strict chamber interior: pi/4 > a > b > |c|.
        p.xx = kPi / 4 * (0.05 + 0.9 * unit(rng));
        p.yy = p.xx * (0.05 + 0.9 * unit(rng));
        p.zz = p.yy * (1.8 * unit(rng) - 0.9);
        const Mat4 u = reconstruct(p);
        const GateParams q = kak_decompose(u);
        REQUIRE(std::abs(q.xx - p.xx) <= 1e-10);
        REQUIRE(std::abs(q.yy - p.yy) <= 1e-10);
        REQUIRE(std::abs(q.zz - p.zz) <= 1e-10);
        REQUIRE((reconstruct(q) - u).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("canonical cores on chamber faces decompose", "[gate]") {
    const std::vector<std::array<double, 3>> faces = {
        {kPi / 4, 0.0, 0.0}, {kPi / 4, kPi / 4, 0.0}, {kPi / 4, 0.2, 0.2},
        {kPi / 4, 0.2, -0.2}, {0.3, 0.3, 0.0}, {0.3, 0.3, 0.3}, {0.3, 0.3, -0.3},
        {0.5, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    Rng rng(8);
    for (const auto &f : faces) {
        GateParams p = random_params(rng);
        p.xx = f[0];
        p.yy = f[1];
        p.zz = f[2];
        const Mat4 u = reconstruct(p);
        const GateParams q = kak_decompose(u);
        CAPTURE(f[0], f[1], f[2], q.xx, q.yy, q.zz);
        CHECK(phase_insensitive_distance(reconstruct(q), u) <= 1e-10);
        CHECK(in_weyl_chamber(q.xx, q.yy, q.zz));
        CHECK(std::abs(q.xx - f[0]) <= 1e-9);
        CHECK(std::abs(q.yy - f[1]) <= 1e-9);
        CHECK(std::abs(std::abs(q.zz) - std::abs(f[2])) <= 1e-9);
    }
}

TEST_CASE("parameter derivatives match finite differences", "[gate]") {
    Rng rng(21);
    const GateParams p = random_params(rng);
    const auto derivs = parameter_derivatives(p);
    const auto base = p.to_array();
    const double h = 1e-6;
    for (std::size_t k = 0; k < GateParams::kStructural; ++k) {
        auto plus = base;
        auto minus = base;
        plus[k] += h;
        minus[k] -= h;
        const Mat4 fd = (reconstruct(GateParams::from_array(plus)) -
                         reconstruct(GateParams::from_array(minus))) /
                        (2 * h);
        CAPTURE(k);
        CHECK((fd - derivs[k]).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("analytic inverse", "[gate]") {
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        const GateParams p = random_params(rng);
        const Mat4 prod = reconstruct(inverse(p)) * reconstruct(p);
        CHECK((prod - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("zyz_decompose round trip", "[gate]") {
    Rng rng(6);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < 100; ++i) {
        const Mat2 u = std::exp(Complex(0, angle(rng))) *
                       euler_matrix({angle(rng), angle(rng), angle(rng)});
        const EulerZYZ e = zyz_decompose(u);
        const Mat2 r = euler_matrix(e);
        const Complex overlap = (r.adjoint() * u).trace();
        CHECK((r * (overlap / std::abs(overlap)) - u).cwiseAbs().maxCoeff() < 1e-12);
    }
    // Degenerate beta = 0 and beta = pi.
    for (const Mat2 &u : {Mat2(rz(0.7)), Mat2(ry(kPi) * rz(0.3))}) {
        const Mat2 r = euler_matrix(zyz_decompose(u));
        const Complex overlap = (r.adjoint() * u).trace();
        CHECK((r * (overlap / std::abs(overlap)) - u).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("parameter array layout", "[gate]") {
    GateParams p;
    p.pre[0] = {1, 2, 3};
    p.pre[1] = {4, 5, 6};
    p.xx = 7;
    p.yy = 8;
    p.zz = 9;
    p.post[0] = {10, 11, 12};
    p.post[1] = {13, 14, 15};
    p.phase = 16;
    const auto a = p.to_array();
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k] == static_cast<double>(k + 1));
    }
    CHECK(GateParams::from_array(a) == p);
}
