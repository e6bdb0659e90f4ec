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
 * Two-qubit gate parameterization and the numerical KAK decomposition.
 *
 * A gate acting on the neighbouring pair (q, q+1) is stored as
 *
 *   U = e^{i phase} (Post_hi (x) Post_lo) exp(i(a XX + b YY + c ZZ)) (Pre_hi (x) Pre_lo)
 *
 * where every single-qubit factor is an Euler product Rz(alpha) Ry(beta) Rz(gamma).
 * The 4x4 matrix is indexed with the low qubit as the least significant bit,
 * i.e. the tensor product is written kron(high, low).
 */
#pragma once

#include "prc/rng.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <span>

namespace prc {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

/// Rz(alpha) Ry(beta) Rz(gamma); gamma acts first.
struct EulerZYZ {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    friend bool operator==(const EulerZYZ &, const EulerZYZ &) = default;
};

struct GateParams {
    /// Number of parameters that affect measurement statistics.
    static constexpr std::size_t kStructural = 15;
    /// Structural parameters plus the global phase.
    static constexpr std::size_t kSerialized = 16;

    std::array<EulerZYZ, 2> pre{};  // [0] low qubit, [1] high qubit
    double xx = 0.0;
    double yy = 0.0;
    double zz = 0.0;
    std::array<EulerZYZ, 2> post{}; // [0] low qubit, [1] high qubit
    double phase = 0.0;

    /// Layout: pre_lo(3) pre_hi(3) xx yy zz post_lo(3) post_hi(3) phase.
    [[nodiscard]] std::array<double, kSerialized> to_array() const;
    static GateParams from_array(std::span<const double> values);

    friend bool operator==(const GateParams &, const GateParams &) = default;
};

Mat2 rz(double theta);
Mat2 ry(double theta);
Mat2 euler_matrix(const EulerZYZ &e);
Mat2 pauli_x();
Mat4 kron(const Mat2 &high, const Mat2 &low);

/// exp(i(a XX + b YY + c ZZ)).
Mat4 canonical_core(double a, double b, double c);

Mat4 reconstruct(const GateParams &p);

/// d reconstruct / d theta_k for the 15 structural parameters, in
/// to_array() order.
std::array<Mat4, GateParams::kStructural> parameter_derivatives(const GateParams &p);

/// Exact inverse, built analytically (entangling angles are negated, so the
/// result is generally outside the Weyl chamber).
GateParams inverse(const GateParams &p);

/// Haar-distributed element of U(4) from a complex Ginibre matrix and a
/// phase-corrected QR factorization.
Mat4 haar_random_unitary(Rng &rng);

/// Maximum absolute entry of U^dagger U - I.
double unitarity_defect(const Mat4 &u);

/// Max elementwise |a e^{i phi} - b| minimized over the global phase phi
/// (phi chosen by the Frobenius-optimal alignment).
double phase_insensitive_distance(const Mat4 &a, const Mat4 &b);

/// pi/4 >= a >= b >= |c| within tol.
bool in_weyl_chamber(double a, double b, double c, double tol = 1e-9);

/// Decomposes U into GateParams with canonical entangling angles.
/// Throws Errc::DecompositionFailure when U is not unitary to 1e-10.
GateParams kak_decompose(const Mat4 &u);

/// Returns kak_decompose(reconstruct(p)) unless p is already canonical.
GateParams canonicalize(const GateParams &p);

/// Extracts (alpha, beta, gamma) with u = e^{i phi} Rz(alpha) Ry(beta) Rz(gamma).
EulerZYZ zyz_decompose(const Mat2 &u);

} // namespace prc
