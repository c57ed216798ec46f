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
/**
 * @file
 * Dense statevector evolution and the Hadamard-test measurement model.
 *
 * The ancilla readout <X_a> + i <Y_a> of a Hadamard test on W equals the
 * transition amplitude <s_[i]|W|0...0>, so the default path reads that
 * amplitude straight from the statevector of W. The literal (n+1)-qubit
 * controlled circuit is kept as full_hadamard_test_reference() for checking.
 *
 * Depolarizing noise is applied analytically: with q = 1 - p and d the
 * effective depth, x is scaled by q^d and y by q^(d+1) (the Y readout needs
 * one more basis-change layer).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "qhopm/circuits.hpp"
#include "qhopm/rng.hpp"
#include "qhopm/tensor_core.hpp"

namespace qhopm {

/// Applies `c` in place; `state.qubits()` must equal `c.qubits()`.
void apply(const Circuit &c, StateTensor &state);

/// c |0...0>.
[[nodiscard]] StateTensor run(const Circuit &c);

/// Basis index of |s_[wire]>: wire `wire` in state s, all others |0>.
/// With no wire, the all-zero index.
[[nodiscard]] std::size_t selector_index(std::size_t n,
                                         std::optional<std::size_t> wire,
                                         int s);

/// <s_[wire]| W |0...0>.
[[nodiscard]] ComplexAmp overlap_amplitude(const Circuit &w,
                                           std::optional<std::size_t> wire,
                                           int s);

struct AncillaExpectations {
    double x = 0.0;
    double y = 0.0;
};

struct DepolarizingNoise {
    double p = 0.0;
    /// When false only the lambda measurement (no wire selected) is noisy.
    bool apply_to_tomography = true;
    /// Replaces effective_depth() for every measurement.
    std::optional<std::size_t> depth_override;
};

enum class ShotMode { Exact, Shots };

/// Turns circuits into ancilla expectations. Holds the sampling stream and
/// counts measurement settings (two per Hadamard test: X_a and Y_a).
class MeasurementBackend {
  public:
    /// Exact, noiseless.
    MeasurementBackend() = default;

    [[nodiscard]] static MeasurementBackend exact();
    [[nodiscard]] static MeasurementBackend sampled(std::uint64_t shots,
                                                    std::uint64_t seed);

    /// Throws ContractViolation unless 0 <= p <= 1.
    MeasurementBackend &with_noise(const DepolarizingNoise &noise);

    [[nodiscard]] ShotMode mode() const noexcept { return mode_; }
    [[nodiscard]] std::uint64_t shots() const noexcept { return shots_; }
    [[nodiscard]] const std::optional<DepolarizingNoise> &noise() const noexcept {
        return noise_;
    }
    [[nodiscard]] double noise_rate() const noexcept {
        return noise_ ? noise_->p : 0.0;
    }

    [[nodiscard]] std::uint64_t settings_used() const noexcept {
        return settings_;
    }
    void count_settings(std::uint64_t k) noexcept { settings_ += k; }

    /// Depth the noise model uses for `w`.
    [[nodiscard]] std::size_t noise_depth(const Circuit &w) const;

    /// Estimate of `value` in [-1, 1] from `shots` +-1 outcomes; identity in
    /// exact mode.
    [[nodiscard]] double sample(double value);

  private:
    ShotMode mode_ = ShotMode::Exact;
    std::uint64_t shots_ = 0;
    std::optional<DepolarizingNoise> noise_;
    Rng rng_{0};
    std::uint64_t settings_ = 0;
};

/// Layer depth of the data-qubit circuit, counting controlled gates as their
/// base gate.
[[nodiscard]] std::size_t effective_depth(const Circuit &w);

/// Hadamard test of W with U_s on `wire` (s = 1 selects U_s = X).
[[nodiscard]] AncillaExpectations hadamard_test(const Circuit &w,
                                                std::optional<std::size_t> wire,
                                                int s,
                                                MeasurementBackend &backend);

/// Same, for an already evolved state W|0...0> of noise depth `d`.
[[nodiscard]] AncillaExpectations hadamard_test(const StateTensor &w_state,
                                                std::size_t d,
                                                std::optional<std::size_t> wire,
                                                int s,
                                                MeasurementBackend &backend);

/// Noiseless expectations from the literal circuit: ancilla H, controlled W,
/// controlled U_s on `wire`, then <X_a>, <Y_a> of the ancilla.
[[nodiscard]] AncillaExpectations
full_hadamard_test_reference(const Circuit &w, std::optional<std::size_t> wire,
                             int s);

} // namespace qhopm
