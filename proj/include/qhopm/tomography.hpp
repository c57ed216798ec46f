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
 * One-qubit state recovery from Hadamard-test readouts.
 *
 * For W|0...0> and a wire i, the two amplitudes u_s = <s_[i]|W|0...0>
 * (s = 0, 1) are read with four settings (X_a and Y_a per s), normalized and
 * converted to (theta, phi).
 */

#pragma once

#include <cstddef>

#include "qhopm/circuits.hpp"
#include "qhopm/simulator.hpp"
#include "qhopm/tensor_core.hpp"

namespace qhopm {

inline constexpr std::size_t kSettingsPerTomography = 4;

struct TomographyResult {
    QubitAngles angles;
    /// Normalized coefficients.
    ComplexAmp c0;
    ComplexAmp c1;
    /// |u| before normalization.
    double raw_norm = 0.0;
    /// (u_0, u_1) as measured.
    QubitVector raw;
};

/// Throws DegenerateUpdate(wire) when |u_0|^2 + |u_1|^2 < 1e-18.
[[nodiscard]] TomographyResult recover_qubit(const Circuit &w, std::size_t wire,
                                             MeasurementBackend &backend);

/// Same, for an already evolved W|0...0> of noise depth `d`.
[[nodiscard]] TomographyResult recover_qubit(const StateTensor &w_state,
                                             std::size_t d, std::size_t wire,
                                             MeasurementBackend &backend);

/// Single-qubit readouts in the sign convention of the angle system below:
/// z = 1 - 2 P(0), x = <X>, y = <Y>.
struct BlochReadout {
    double z = 0.0;
    double x = 0.0;
    double y = 0.0;
};

[[nodiscard]] BlochReadout readout_of(const QubitVector &v);

/// Solves z = -cos(theta), x = sin(theta) sin(phi), y = -sin(theta) cos(phi).
[[nodiscard]] QubitAngles solve_angles_via_expectations(double z, double x,
                                                        double y);

} // namespace qhopm
