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

#include "prc/gate.hpp"

#include "prc/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace prc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Mat2 pauli_y() {
    Mat2 m;
    m << 0.0, -kI, kI, 0.0;
    return m;
}

Mat2 pauli_z() {
    Mat2 m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

EulerZYZ inverse_euler(const EulerZYZ &e) { return {-e.gamma, -e.beta, -e.alpha}; }

void put_euler(std::array<double, GateParams::kSerialized> &out, std::size_t at,
               const EulerZYZ &e) {
    out[at] = e.alpha;
    out[at + 1] = e.beta;
    out[at + 2] = e.gamma;
}

EulerZYZ get_euler(std::span<const double> v, std::size_t at) {
    return {v[at], v[at + 1], v[at + 2]};
}

// Magic (Bell) basis: local SU(2) x SU(2) gates become real SO(4) matrices
// and XX, YY, ZZ are simultaneously diagonal.
const Mat4 &magic_basis() {
    static const Mat4 m = [] {
        const double s = 1.0 / std::sqrt(2.0);
        Mat4 b = Mat4::Zero();
        b(0, 0) = s;
        b(3, 0) = s;
        b(0, 1) = kI * s;
        b(3, 1) = -kI * s;
        b(1, 2) = kI * s;
        b(2, 2) = kI * s;
        b(1, 3) = s;
        b(2, 3) = -s;
        return b;
    }();
    return m;
}

// Rows (x_k, y_k, z_k, 1): eigenvalues of XX, YY, ZZ on magic-basis vector k.
// The canonical core in the magic basis is diag(exp(i theta)) with
// theta = H (a, b, c, g).
const Eigen::Matrix4d &magic_eigen_signs() {
    static const Eigen::Matrix4d h = [] {
        const Mat4 &m = magic_basis();
        const Mat2 x = pauli_x();
        const Mat2 y = pauli_y();
        const Mat2 z = pauli_z();
        const Mat4 xx = m.adjoint() * kron(x, x) * m;
        const Mat4 yy = m.adjoint() * kron(y, y) * m;
        const Mat4 zz = m.adjoint() * kron(z, z) * m;
        Eigen::Matrix4d out;
        for (int k = 0; k < 4; ++k) {
            out(k, 0) = xx(k, k).real();
            out(k, 1) = yy(k, k).real();
            out(k, 2) = zz(k, k).real();
            out(k, 3) = 1.0;
        }
        return out;
    }();
    return h;
}

// Splits a local 4x4 unitary K = kron(H, L) into its factors, each scaled
// to unit determinant. The scalar left over is absorbed into the global
// phase by the caller.
std::pair<Mat2, Mat2> split_local(const Mat4 &k) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    k.cwiseAbs().maxCoeff(&r, &c);
    const Eigen::Index h1 = r >> 1, l1 = r & 1, h2 = c >> 1, l2 = c & 1;
    Mat2 high;
    Mat2 low;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            high(i, j) = k(2 * i + l1, 2 * j + l2);
            low(i, j) = k(2 * h1 + i, 2 * h2 + j);
        }
    }
    high /= std::sqrt(high.determinant());
    low /= std::sqrt(low.determinant());
    return {high, low};
}

double wrap_angle(double x) { return std::remainder(x, 2.0 * kPi); }

double chamber_violation(double a, double b, double c) {
    return std::max(0.0, a - kPi / 4) + std::max(0.0, b - a) + std::max(0.0, std::abs(c) - b);
}

} // namespace

std::array<double, GateParams::kSerialized> GateParams::to_array() const {
    std::array<double, kSerialized> out{};
    put_euler(out, 0, pre[0]);
    put_euler(out, 3, pre[1]);
    out[6] = xx;
    out[7] = yy;
    out[8] = zz;
    put_euler(out, 9, post[0]);
    put_euler(out, 12, post[1]);
    out[15] = phase;
    return out;
}

GateParams GateParams::from_array(std::span<const double> v) {
    if (v.size() != kSerialized && v.size() != kStructural) {
        fail(Errc::InvalidArgument, "gate parameter vector must have 15 or 16 entries");
    }
    GateParams p;
    p.pre = {get_euler(v, 0), get_euler(v, 3)};
    p.xx = v[6];
    p.yy = v[7];
    p.zz = v[8];
    p.post = {get_euler(v, 9), get_euler(v, 12)};
    p.phase = v.size() == kSerialized ? v[15] : 0.0;
    return p;
}

Mat2 rz(double theta) {
    Mat2 m;
    m << std::exp(-kI * (theta / 2)), 0.0, 0.0, std::exp(kI * (theta / 2));
    return m;
}

Mat2 ry(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Mat2 m;
    m << c, -s, s, c;
    return m;
}

Mat2 pauli_x() {
    Mat2 m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Mat2 euler_matrix(const EulerZYZ &e) { return rz(e.alpha) * ry(e.beta) * rz(e.gamma); }

Mat4 kron(const Mat2 &high, const Mat2 &low) {
    Mat4 out;
    for (int h1 = 0; h1 < 2; ++h1) {
        for (int h2 = 0; h2 < 2; ++h2) {
            for (int l1 = 0; l1 < 2; ++l1) {
                for (int l2 = 0; l2 < 2; ++l2) {
                    out(2 * h1 + l1, 2 * h2 + l2) = high(h1, h2) * low(l1, l2);
                }
            }
        }
    }
    return out;
}

Mat4 canonical_core(double a, double b, double c) {
    // XX, YY and ZZ commute, so the exponential is diagonal in the Bell
    // basis; writing it out avoids a matrix exponential.
    const Complex pc = std::exp(kI * c);
    const Complex mc = std::exp(-kI * c);
    const Complex cos_ab = std::cos(a - b);
    const Complex sin_ab = std::sin(a - b);
    const Complex cos_apb = std::cos(a + b);
    const Complex sin_apb = std::sin(a + b);
    Mat4 m = Mat4::Zero();
    // |00>,|11> block: XX - YY couples them with strength (a - b).
    m(0, 0) = pc * cos_ab;
    m(3, 3) = pc * cos_ab;
    m(0, 3) = pc * kI * sin_ab;
    m(3, 0) = pc * kI * sin_ab;
    // |01>,|10> block: XX + YY couples them with strength (a + b).
    m(1, 1) = mc * cos_apb;
    m(2, 2) = mc * cos_apb;
    m(1, 2) = mc * kI * sin_apb;
    m(2, 1) = mc * kI * sin_apb;
    return m;
}

Mat4 reconstruct(const GateParams &p) {
    const Mat4 pre = kron(euler_matrix(p.pre[1]), euler_matrix(p.pre[0]));
    const Mat4 post = kron(euler_matrix(p.post[1]), euler_matrix(p.post[0]));
    return std::exp(kI * p.phase) * post * canonical_core(p.xx, p.yy, p.zz) * pre;
}

std::array<Mat4, GateParams::kStructural> parameter_derivatives(const GateParams &p) {
    const Complex half{0.0, -0.5};
    const Mat2 z = pauli_z();
    const Mat2 y = pauli_y();
    const Mat2 x = pauli_x();

    // d/d(alpha, beta, gamma) of Rz(alpha) Ry(beta) Rz(gamma).
    auto euler_derivs = [&](const EulerZYZ &e) {
        const Mat2 za = rz(e.alpha);
        const Mat2 yb = ry(e.beta);
        const Mat2 zg = rz(e.gamma);
        return std::array<Mat2, 3>{half * z * za * yb * zg, za * (half * y) * yb * zg,
                                   za * yb * zg * (half * z)};
    };

    const Complex phase = std::exp(kI * p.phase);
    const Mat2 pre_lo = euler_matrix(p.pre[0]);
    const Mat2 pre_hi = euler_matrix(p.pre[1]);
    const Mat2 post_lo = euler_matrix(p.post[0]);
    const Mat2 post_hi = euler_matrix(p.post[1]);
    const Mat4 pre = kron(pre_hi, pre_lo);
    const Mat4 post = phase * kron(post_hi, post_lo);
    const Mat4 core = canonical_core(p.xx, p.yy, p.zz);
    const Mat4 post_core = post * core;
    const Mat4 core_pre = core * pre;

    std::array<Mat4, GateParams::kStructural> out;
    const auto d_pre_lo = euler_derivs(p.pre[0]);
    const auto d_pre_hi = euler_derivs(p.pre[1]);
    const auto d_post_lo = euler_derivs(p.post[0]);
    const auto d_post_hi = euler_derivs(p.post[1]);
    for (std::size_t k = 0; k < 3; ++k) {
        out[k] = post_core * kron(pre_hi, d_pre_lo[k]);
        out[3 + k] = post_core * kron(d_pre_hi[k], pre_lo);
        out[9 + k] = phase * kron(post_hi, d_post_lo[k]) * core_pre;
        out[12 + k] = phase * kron(d_post_hi[k], post_lo) * core_pre;
    }
    out[6] = post * (kI * kron(x, x)) * core_pre;
    out[7] = post * (kI * kron(y, y)) * core_pre;
    out[8] = post * (kI * kron(z, z)) * core_pre;
    return out;
}

GateParams inverse(const GateParams &p) {
    GateParams inv;
    inv.pre = {inverse_euler(p.post[0]), inverse_euler(p.post[1])};
    inv.post = {inverse_euler(p.pre[0]), inverse_euler(p.pre[1])};
    inv.xx = -p.xx;
    inv.yy = -p.yy;
    inv.zz = -p.zz;
    inv.phase = -p.phase;
    return inv;
}

Mat4 haar_random_unitary(Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat4 g;
    for (int c = 0; c < 4; ++c) {
        for (int r = 0; r < 4; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = Complex{re, im} / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Mat4> qr(g);
    Mat4 q = qr.householderQ();
    const Mat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < 4; ++k) {
        const Complex d = r(k, k);
        q.col(k) *= d / std::abs(d);
    }
    return q;
}

double unitarity_defect(const Mat4 &u) {
    return (u.adjoint() * u - Mat4::Identity()).cwiseAbs().maxCoeff();
}

double phase_insensitive_distance(const Mat4 &a, const Mat4 &b) {
    const Complex overlap = (a.adjoint() * b).trace();
    const Complex align = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1.0};
    return (a * align - b).cwiseAbs().maxCoeff();
}

bool in_weyl_chamber(double a, double b, double c, double tol) {
    return a <= kPi / 4 + tol && b <= a + tol && std::abs(c) <= b + tol;
}

EulerZYZ zyz_decompose(const Mat2 &u) {
    const Mat2 v = u / std::sqrt(u.determinant());
    const double beta = 2.0 * std::atan2(std::abs(v(1, 0)), std::abs(v(0, 0)));
    constexpr double eps = 1e-14;
    const double sum = std::abs(v(1, 1)) > eps ? 2.0 * std::arg(v(1, 1)) : 0.0;
    const double diff = std::abs(v(1, 0)) > eps ? 2.0 * std::arg(v(1, 0)) : 0.0;
    return {wrap_angle((sum + diff) / 2), beta, wrap_angle((sum - diff) / 2)};
}

GateParams kak_decompose(const Mat4 &u) {
    if (!u.allFinite() || unitarity_defect(u) > 1e-10) {
        fail(Errc::DecompositionFailure, "kak_decompose: input is not unitary");
    }
    const Mat4 &magic = magic_basis();
    const Mat4 su = u / std::pow(u.determinant(), 0.25);
    const Mat4 up = magic.adjoint() * su * magic;
    const Mat4 m2 = up.transpose() * up;

    // m2 is symmetric unitary, so its real and imaginary parts are commuting
    // real symmetric matrices; a generic linear combination shares their
    // orthogonal eigenbasis.
    Eigen::Matrix4d basis;
    Eigen::Vector4cd eig;
    bool found = false;
    for (int attempt = 0; attempt < 16 && !found; ++attempt) {
        const double t = 0.5 + 0.61803398875 * attempt;
        const Eigen::Matrix4d mix = std::cos(t) * m2.real() + std::sin(t) * m2.imag();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(mix);
        basis = solver.eigenvectors();
        const Mat4 diag = basis.transpose().cast<Complex>() * m2 * basis.cast<Complex>();
        eig = diag.diagonal();
        const Mat4 off = diag - Mat4(eig.asDiagonal());
        found = off.cwiseAbs().maxCoeff() < 1e-9;
    }
    if (!found) {
        fail(Errc::DecompositionFailure, "kak_decompose: simultaneous diagonalization failed");
    }
    if (basis.determinant() < 0) {
        basis.col(0) *= -1.0;
    }

    std::array<double, 4> raw{};
    for (int k = 0; k < 4; ++k) {
        raw[static_cast<std::size_t>(k)] = std::arg(eig(k)) / 2.0;
    }
    const double raw_sum = raw[0] + raw[1] + raw[2] + raw[3];
    const Eigen::Matrix4d hinv = magic_eigen_signs().inverse();

    // Local equivalences act on the diagonal phases as permutations and as
    // shifts by multiples of pi with even total (keeping det = 1); search
    // them for the representative inside the Weyl chamber.
    struct Candidate {
        std::array<int, 4> perm;
        Eigen::Vector4d theta;
        Eigen::Vector4d coords;
        double violation;
    };
    Candidate best{{}, {}, {}, std::numeric_limits<double>::infinity()};
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        for (int shifts = 0; shifts < 256; ++shifts) {
            std::array<int, 4> m{shifts & 3, (shifts >> 2) & 3, (shifts >> 4) & 3,
                                 (shifts >> 6) & 3};
            const double total = raw_sum + kPi * (m[0] + m[1] + m[2] + m[3]);
            if (std::abs(std::remainder(total, 2.0 * kPi)) > 1e-6) {
                continue;
            }
            Eigen::Vector4d theta;
            for (int k = 0; k < 4; ++k) {
                theta(k) = raw[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] +
                           kPi * m[static_cast<std::size_t>(k)];
            }
            const Eigen::Vector4d coords = hinv * theta;
            const double v = chamber_violation(coords(0), coords(1), coords(2));
            if (v < best.violation - 1e-12) {
                best = {perm, theta, coords, v};
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Eigen::Matrix4d p_perm;
    for (int k = 0; k < 4; ++k) {
        p_perm.col(k) = basis.col(best.perm[static_cast<std::size_t>(k)]);
    }
    if (p_perm.determinant() < 0) {
        p_perm.col(0) *= -1.0;
    }
    Eigen::Vector4cd inv_a;
    for (int k = 0; k < 4; ++k) {
        inv_a(k) = std::exp(-kI * best.theta(k));
    }
    const Mat4 k1p = up * p_perm.cast<Complex>() * inv_a.asDiagonal();
    const Mat4 k2p = p_perm.transpose().cast<Complex>();
    const Mat4 k1 = magic * k1p * magic.adjoint();
    const Mat4 k2 = magic * k2p * magic.adjoint();

    const auto [post_hi, post_lo] = split_local(k1);
    const auto [pre_hi, pre_lo] = split_local(k2);

    GateParams p;
    p.pre = {zyz_decompose(pre_lo), zyz_decompose(pre_hi)};
    p.post = {zyz_decompose(post_lo), zyz_decompose(post_hi)};
    p.xx = best.coords(0);
    p.yy = best.coords(1);
    p.zz = best.coords(2);
    p.phase = 0.0;
    const Mat4 r0 = reconstruct(p);
    p.phase = std::arg((r0.adjoint() * u).trace());

    if (phase_insensitive_distance(reconstruct(p), u) > 1e-9) {
        fail(Errc::DecompositionFailure, "kak_decompose: reconstruction mismatch");
    }
    return p;
}

GateParams canonicalize(const GateParams &p) {
    if (in_weyl_chamber(p.xx, p.yy, p.zz, 0.0)) {
        return p;
    }
    return kak_decompose(reconstruct(p));
}

} // namespace prc
