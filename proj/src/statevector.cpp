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

#include "prc/statevector.hpp"

#include "prc/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace prc {

namespace {

// Plain real arithmetic: std::complex multiplication goes through the
// Annex G NaN-recovery path unless fast-math is on.
struct Cplx {
    double re;
    double im;
};

inline Cplx load(const Complex &z) { return {z.real(), z.imag()}; }

inline void fma_into(Cplx &acc, const Cplx &a, const Cplx &b) {
    acc.re += a.re * b.re - a.im * b.im;
    acc.im += a.re * b.im + a.im * b.re;
}

inline void conj_fma_into(Cplx &acc, const Cplx &a, const Cplx &b) {
    // acc += conj(a) * b
    acc.re += a.re * b.re + a.im * b.im;
    acc.im += a.re * b.im - a.im * b.re;
}

void check_capacity(int n) {
    if (n > kMaxSimQubits) {
        fail(Errc::Capacity, "statevector of " + std::to_string(n) +
                                 " qubits exceeds the simulator limit of " +
                                 std::to_string(kMaxSimQubits));
    }
}

void apply_flips(Statevector &state, const Circuit &circuit) {
    for (int q : circuit.final_flips()) {
        state.apply_x(q);
    }
}

} // namespace

Statevector::Statevector(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1) {
        fail(Errc::InvalidDimension, "statevector needs at least one qubit");
    }
    check_capacity(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

void Statevector::apply(const Mat4 &u, int qubit_low) {
    std::array<Cplx, 16> m{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            m[static_cast<std::size_t>(4 * r + c)] = load(u(r, c));
        }
    }
    const std::size_t lo = std::size_t{1} << qubit_low;
    const std::size_t hi = lo << 1U;
    const std::size_t block = lo << 2U;
    auto *data = reinterpret_cast<double *>(amps_.data());
    for (std::size_t base = 0; base < amps_.size(); base += block) {
        for (std::size_t off = 0; off < lo; ++off) {
            const std::array<std::size_t, 4> idx{base + off, base + off + lo, base + off + hi,
                                                 base + off + lo + hi};
            std::array<Cplx, 4> in{};
            for (std::size_t k = 0; k < 4; ++k) {
                in[k] = {data[2 * idx[k]], data[2 * idx[k] + 1]};
            }
            for (std::size_t r = 0; r < 4; ++r) {
                Cplx acc{0.0, 0.0};
                for (std::size_t c = 0; c < 4; ++c) {
                    fma_into(acc, m[4 * r + c], in[c]);
                }
                data[2 * idx[r]] = acc.re;
                data[2 * idx[r] + 1] = acc.im;
            }
        }
    }
}

void Statevector::apply_x(int qubit) {
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & bit) == 0) {
            std::swap(amps_[i], amps_[i | bit]);
        }
    }
}

void Statevector::set_basis_state(std::uint64_t index) {
    std::fill(amps_.begin(), amps_.end(), Complex{0.0, 0.0});
    amps_.at(index) = 1.0;
}

double Statevector::norm() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

Statevector run(const Circuit &circuit) {
    check_capacity(circuit.num_qubits());
    Statevector state(circuit.num_qubits());
    for (const auto &layer : circuit.layers()) {
        for (const auto &g : layer) {
            state.apply(reconstruct(g.params), g.qubit_low);
        }
    }
    apply_flips(state, circuit);
    return state;
}

Complex peak_amplitude(const Circuit &circuit) { return run(circuit)[circuit.target().index()]; }

ProbabilityDistribution distribution_of(const Statevector &state) {
    ProbabilityDistribution out{state.num_qubits(), std::vector<double>(state.size())};
    for (std::size_t i = 0; i < state.size(); ++i) {
        out.probs[i] = std::norm(state[i]);
    }
    return out;
}

ProbabilityDistribution full_distribution(const Circuit &circuit) {
    return distribution_of(run(circuit));
}

ShotHistogram sample(const ProbabilityDistribution &dist, std::uint64_t shots, Rng &rng) {
    if (shots == 0) {
        fail(Errc::InvalidArgument, "sample: shots must be at least 1");
    }
    if (dist.probs.empty()) {
        fail(Errc::InvalidArgument, "sample: empty distribution");
    }
    std::vector<double> cdf(dist.probs.size());
    double running = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        running += dist.probs[i];
        cdf[i] = running;
        if (dist.probs[i] > 0.0) {
            last_nonzero = i;
        }
    }
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<std::uint64_t> dense;
    const bool use_dense = dist.num_qubits <= 22;
    if (use_dense) {
        dense.assign(cdf.size(), 0);
    }
    ShotHistogram hist{dist.num_qubits, shots, {}};
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform(rng) * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto index = static_cast<std::size_t>(it - cdf.begin());
        index = std::min(index, last_nonzero);
        if (use_dense) {
            ++dense[index];
        } else {
            ++hist.counts[index];
        }
    }
    if (use_dense) {
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (dense[i] != 0) {
                hist.counts.emplace_hint(hist.counts.end(), i, dense[i]);
            }
        }
    }
    return hist;
}

PeakGradient peak_gradient(const Circuit &circuit) {
    Statevector psi = run(circuit);
    const int n = circuit.num_qubits();
    const std::uint64_t target = circuit.target().index();

    PeakGradient out;
    out.amplitude = psi[target];
    out.probability = std::norm(out.amplitude);
    out.gradient.assign(circuit.num_peaking_gates() * GateParams::kStructural, 0.0);

    Statevector lambda(n);
    lambda.set_basis_state(target);
    apply_flips(psi, circuit);
    apply_flips(lambda, circuit);

    const Cplx alpha_conj{out.amplitude.real(), -out.amplitude.imag()};
    const auto &layers = circuit.layers();
    std::size_t param_end = out.gradient.size();
    auto *psi_data = reinterpret_cast<const double *>(psi.amplitudes().data());
    auto *lam_data = reinterpret_cast<const double *>(lambda.amplitudes().data());

    for (int l = circuit.depth() - 1; l >= circuit.random_depth(); --l) {
        const Layer &layer = layers[static_cast<std::size_t>(l)];
        param_end -= layer.size() * GateParams::kStructural;
        std::size_t at = param_end;
        for (const auto &g : layer) {
            const Mat4 u = reconstruct(g.params);
            const Mat4 u_dag = u.adjoint();
            psi.apply(u_dag, g.qubit_low);

            // env(r, c) = sum over spectator bits of conj(lambda_r) psi_c.
            std::array<Cplx, 16> env{};
            const std::size_t lo = std::size_t{1} << g.qubit_low;
            const std::size_t hi = lo << 1U;
            const std::size_t block = lo << 2U;
            for (std::size_t base = 0; base < psi.size(); base += block) {
                for (std::size_t off = 0; off < lo; ++off) {
                    const std::array<std::size_t, 4> idx{base + off, base + off + lo,
                                                         base + off + hi, base + off + lo + hi};
                    for (std::size_t r = 0; r < 4; ++r) {
                        const Cplx lr{lam_data[2 * idx[r]], lam_data[2 * idx[r] + 1]};
                        for (std::size_t c = 0; c < 4; ++c) {
                            const Cplx pc{psi_data[2 * idx[c]], psi_data[2 * idx[c] + 1]};
                            conj_fma_into(env[4 * r + c], lr, pc);
                        }
                    }
                }
            }

            const auto derivs = parameter_derivatives(g.params);
            for (std::size_t k = 0; k < GateParams::kStructural; ++k) {
                Cplx d_alpha{0.0, 0.0};
                for (std::size_t r = 0; r < 4; ++r) {
                    for (std::size_t c = 0; c < 4; ++c) {
                        fma_into(d_alpha,
                                 load(derivs[k](static_cast<Eigen::Index>(r),
                                                static_cast<Eigen::Index>(c))),
                                 env[4 * r + c]);
                    }
                }
                // d|alpha|^2 = 2 Re(conj(alpha) d alpha)
                out.gradient[at + k] =
                    2.0 * (alpha_conj.re * d_alpha.re - alpha_conj.im * d_alpha.im);
            }
            at += GateParams::kStructural;
            lambda.apply(u_dag, g.qubit_low);
        }
    }
    return out;
}

} // namespace prc
