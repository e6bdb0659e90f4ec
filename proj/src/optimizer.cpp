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
#include "prc/optimizer.hpp"

#include "prc/error.hpp"
#include "prc/statevector.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <deque>

namespace prc {

namespace {

using Vec = Eigen::VectorXd;

struct Evaluation {
    double p = 0.0;
    Vec grad; // d p / d theta
};

class Problem {
  public:
    explicit Problem(const Circuit &base) : base_(base) {}

    Evaluation operator()(const Vec &theta) const {
        const Circuit c = base_.with_peaking_parameters(
            std::span<const double>(theta.data(), static_cast<std::size_t>(theta.size())));
        PeakGradient g = peak_gradient(c);
        Evaluation e;
        e.p = g.probability;
        e.grad = Eigen::Map<Vec>(g.gradient.data(), static_cast<Eigen::Index>(g.gradient.size()));
        return e;
    }

  private:
    const Circuit &base_;
};

class Recorder {
  public:
    Recorder(OptimizationTrace &trace, const Vec &x0, const Evaluation &e0)
        : trace_(trace), best_x_(x0), best_(e0.p) {
        trace_.initial = e0.p;
        push(e0.p);
    }

    void accept(const Vec &x, double p) {
        if (p > best_) {
            best_ = p;
            best_x_ = x;
        }
        push(p);
    }

    [[nodiscard]] const Vec &best_x() const { return best_x_; }
    [[nodiscard]] double best() const { return best_; }

  private:
    void push(double p) {
        trace_.values.push_back(p);
        trace_.best_so_far.push_back(best_);
    }

    OptimizationTrace &trace_;
    Vec best_x_;
    double best_;
};

// Minimizes -p. Returns false when the line search cannot make progress.
bool lbfgs_stage(const Problem &problem, const OptimizerConfig &config, Vec &x, Evaluation &e,
                 Recorder &rec, OptimizationTrace &trace) {
    std::deque<Vec> s_hist;
    std::deque<Vec> y_hist;
    std::deque<double> rho_hist;
    Vec g = -e.grad;
    for (int it = 0; it < config.stage1_iters; ++it) {
        if (g.norm() <= config.stop_tol) {
            trace.converged = true;
            return true;
        }
        // Two-loop recursion.
        Vec q = g;
        std::vector<double> alpha(s_hist.size());
        for (std::size_t i = s_hist.size(); i-- > 0;) {
            alpha[i] = rho_hist[i] * s_hist[i].dot(q);
            q -= alpha[i] * y_hist[i];
        }
        double gamma = 1.0;
        if (!s_hist.empty()) {
            gamma = s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
        }
        Vec dir = gamma * q;
        for (std::size_t i = 0; i < s_hist.size(); ++i) {
            const double beta = rho_hist[i] * y_hist[i].dot(dir);
            dir += (alpha[i] - beta) * s_hist[i];
        }
        dir = -dir;
        double slope = g.dot(dir);
        if (slope >= 0.0) {
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
            dir = -g;
            slope = -g.squaredNorm();
        }

        // Backtracking Armijo search on f = -p.
        const double f0 = -e.p;
        double step = 1.0;
        if (s_hist.empty()) {
            step = std::min(1.0, 0.1 / std::max(dir.norm(), 1e-300));
        }
        bool accepted = false;
        Vec x_new;
        Evaluation e_new;
        for (int ls = 0; ls < 40; ++ls) {
            x_new = x + step * dir;
            e_new = problem(x_new);
            if (-e_new.p <= f0 + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            if (s_hist.empty()) {
                return false;
            }
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
            continue;
        }
        const Vec g_new = -e_new.grad;
        const Vec s = x_new - x;
        const Vec y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            s_hist.push_back(s);
            y_hist.push_back(y);
            rho_hist.push_back(1.0 / sy);
            if (static_cast<int>(s_hist.size()) > config.lbfgs_memory) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
        }
        x = x_new;
        e = e_new;
        g = g_new;
        ++trace.stage1_iterations;
        rec.accept(x, e.p);
    }
    return true;
}

void adam_stage(const Problem &problem, const OptimizerConfig &config, Vec &x, Evaluation &e,
                Recorder &rec, OptimizationTrace &trace) {
    Vec m = Vec::Zero(x.size());
    Vec v = Vec::Zero(x.size());
    double b1t = 1.0;
    double b2t = 1.0;
    for (int it = 0; it < config.stage2_iters; ++it) {
        const Vec g = -e.grad;
        if (g.norm() <= config.stop_tol) {
            trace.converged = true;
            return;
        }
        m = config.adam_beta1 * m + (1.0 - config.adam_beta1) * g;
        v = config.adam_beta2 * v + (1.0 - config.adam_beta2) * g.cwiseProduct(g);
        b1t *= config.adam_beta1;
        b2t *= config.adam_beta2;
        const Vec m_hat = m / (1.0 - b1t);
        const Vec v_hat = v / (1.0 - b2t);
        x -= config.adam_step * (m_hat.array() / (v_hat.array().sqrt() + config.adam_eps)).matrix();
        e = problem(x);
        ++trace.stage2_iterations;
        rec.accept(x, e.p);
    }
}

} // namespace

void OptimizerConfig::validate() const {
    if (stage1_iters < 0 || stage2_iters < 0) {
        fail(Errc::InvalidArgument, "optimizer budgets must be non-negative");
    }
    if (!(adam_step > 0.0)) {
        fail(Errc::InvalidArgument, "adam_step must be positive");
    }
    if (lbfgs_memory < 1) {
        fail(Errc::InvalidArgument, "lbfgs_memory must be at least 1");
    }
    if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0 && adam_beta2 >= 0.0 && adam_beta2 < 1.0)) {
        fail(Errc::InvalidArgument, "Adam moment parameters must lie in [0, 1)");
    }
}

double objective(const Circuit &circuit) { return std::norm(peak_amplitude(circuit)); }

OptimizationResult optimize(const Circuit &circuit, const OptimizerConfig &config) {
    config.validate();
    if (circuit.num_peaking_gates() == 0) {
        fail(Errc::NothingToOptimize, "circuit has no peaking-half gates");
    }
    const auto start = std::chrono::steady_clock::now();
    const auto theta0 = circuit.peaking_parameters();
    Vec x = Eigen::Map<const Vec>(theta0.data(), static_cast<Eigen::Index>(theta0.size()));

    const Problem problem(circuit);
    Evaluation e = problem(x);
    OptimizationTrace trace;
    Recorder rec(trace, x, e);

    // A vanishing gradient away from p = 1 is a saddle; nudge off it.
    if (e.grad.norm() <= config.stop_tol && e.p < 1.0 - 1e-9) {
        Rng rng(config.seed);
        std::normal_distribution<double> normal(0.0, 1e-3);
        for (Eigen::Index k = 0; k < x.size(); ++k) {
            x(k) += normal(rng);
        }
        e = problem(x);
        rec.accept(x, e.p);
    }

    lbfgs_stage(problem, config, x, e, rec, trace);
    if (!trace.converged) {
        x = rec.best_x();
        e = problem(x);
        adam_stage(problem, config, x, e, rec, trace);
    }

    const Vec &best = rec.best_x();
    trace.final_value = rec.best();
    trace.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {circuit.with_peaking_parameters(
                std::span<const double>(best.data(), static_cast<std::size_t>(best.size()))),
            std::move(trace)};
}

} // namespace prc
