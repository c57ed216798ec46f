// Copyright 2026 The QHOPM Authors
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

#include "qhopm/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qhopm/errors.hpp"
#include "qhopm/kernels.hpp"

namespace qhopm {

void apply(const Circuit &c, StateTensor &state) {
    const std::size_t n = c.qubits();
    if (state.qubits() != n) {
        throw ContractViolation("apply: circuit and state widths differ");
    }
    auto bit = [n](std::size_t wire) {
        return static_cast<unsigned>(n - 1 - wire);
    };
    for (const Gate &g : c.gates()) {
        std::uint64_t control_mask = 0;
        for (std::size_t w : g.controls) {
            control_mask |= std::uint64_t{1} << bit(w);
        }
        if (g.qubits.size() == 2) {
            control_mask |= std::uint64_t{1} << bit(g.qubits[0]);
        }
        kernels::omp::apply_1q(state.amps(), bit(g.qubits.back()),
                               target_matrix(g), control_mask);
    }
}

StateTensor run(const Circuit &c) {
    StateTensor state(c.qubits());
    apply(c, state);
    return state;
}

std::size_t selector_index(std::size_t n, std::optional<std::size_t> wire,
                           int s) {
    if (s != 0 && s != 1) {
        throw ContractViolation("selector bit must be 0 or 1");
    }
    if (!wire) {
        return 0;
    }
    if (*wire >= n) {
        throw ContractViolation("selector wire out of range");
    }
    return static_cast<std::size_t>(s) << (n - 1 - *wire);
}

ComplexAmp overlap_amplitude(const Circuit &w, std::optional<std::size_t> wire,
                             int s) {
    const std::size_t index = selector_index(w.qubits(), wire, s);
    return run(w)[index];
}

MeasurementBackend MeasurementBackend::exact() { return MeasurementBackend{}; }

MeasurementBackend MeasurementBackend::sampled(std::uint64_t shots,
                                               std::uint64_t seed) {
    if (shots < 1) {
        throw ContractViolation("shot count must be >= 1");
    }
    MeasurementBackend b;
    b.mode_ = ShotMode::Shots;
    b.shots_ = shots;
    b.rng_.seed(seed);
    return b;
}

MeasurementBackend &MeasurementBackend::with_noise(const DepolarizingNoise &noise) {
    if (!(noise.p >= 0.0 && noise.p <= 1.0)) {
        throw ContractViolation("noise rate must lie in [0, 1]");
    }
    noise_ = noise;
    return *this;
}

std::size_t MeasurementBackend::noise_depth(const Circuit &w) const {
    if (noise_ && noise_->depth_override) {
        return *noise_->depth_override;
    }
    return effective_depth(w);
}

double MeasurementBackend::sample(double value) {
    if (mode_ == ShotMode::Exact) {
        return value;
    }
    const double prob = std::clamp(0.5 * (1.0 + value), 0.0, 1.0);
    std::binomial_distribution<std::uint64_t> draw(shots_, prob);
    const auto hits = static_cast<double>(draw(rng_));
    return 2.0 * hits / static_cast<double>(shots_) - 1.0;
}

std::size_t effective_depth(const Circuit &w) { return depth(w, false); }

AncillaExpectations hadamard_test(const StateTensor &w_state, std::size_t d,
                                  std::optional<std::size_t> wire, int s,
                                  MeasurementBackend &backend) {
    const ComplexAmp a = w_state[selector_index(w_state.qubits(), wire, s)];
    double x = a.real();
    double y = a.imag();

    const auto &noise = backend.noise();
    if (noise && (!wire || noise->apply_to_tomography)) {
        const double q = 1.0 - noise->p;
        const double qd = std::pow(q, static_cast<double>(d));
        x *= qd;
        y *= qd * q;
    }

    backend.count_settings(2);
    const double x_hat = backend.sample(x);
    const double y_hat = backend.sample(y);
    return {x_hat, y_hat};
}

AncillaExpectations hadamard_test(const Circuit &w,
                                  std::optional<std::size_t> wire, int s,
                                  MeasurementBackend &backend) {
    return hadamard_test(run(w), backend.noise_depth(w), wire, s, backend);
}

AncillaExpectations
full_hadamard_test_reference(const Circuit &w, std::optional<std::size_t> wire,
                             int s) {
    const std::size_t n = w.qubits();
    static_cast<void>(selector_index(n, wire, s)); // validates wire and s

    Circuit full(n + 1);
    full.h(0);
    full.append(controlled(w));
    if (wire && s == 1) {
        full.add({GateKind::X, {*wire + 1}, {}, {0}});
    }
    const StateTensor state = run(full);

    // rho_01 of the ancilla: sum_r psi(0, r) conj(psi(1, r)).
    const std::size_t half = std::size_t{1} << n;
    ComplexAmp rho01{0.0, 0.0};
    for (std::size_t r = 0; r < half; ++r) {
        rho01 += state[r] * std::conj(state[half + r]);
    }
    return {2.0 * rho01.real(), -2.0 * rho01.imag()};
}

} // namespace qhopm
