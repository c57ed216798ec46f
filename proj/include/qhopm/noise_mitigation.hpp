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
 * Depolarizing-noise model for measured overlaps, post-hoc mitigation of
 * E_G, and noise-rate calibration against a reference state.
 *
 * Under d layers of depolarizing noise at rate p (q = 1 - p) a measured
 * overlap of true modulus lambda' and phase gamma' reads
 *
 *     lambda = q^d sqrt(1 - eta sin^2 gamma') lambda',   eta = 1 - q^2,
 *
 * which mitigate() inverts at the level of E_G = 1 - lambda^2.
 */

#pragma once

#include <cstddef>

namespace qhopm {

struct NoiseParams {
    double p = 0.0;
    std::size_t d = 0;

    [[nodiscard]] double q() const noexcept { return 1.0 - p; }
    [[nodiscard]] double eta() const noexcept { return 1.0 - q() * q(); }
    void validate() const;
};

/// q^(2d) (1 - eta sin^2 gamma): the factor multiplying lambda'^2.
[[nodiscard]] double attenuation(const NoiseParams &np, double gamma);

[[nodiscard]] double noisy_lambda(double lambda_true, const NoiseParams &np,
                                  double gamma);

[[nodiscard]] double noisy_e_g(double e_true, const NoiseParams &np,
                               double gamma);

/// E'_G = 1 - (1 - E_G) / attenuation, clamped below at 0.
/// Throws MitigationOverflow if the attenuation is not positive.
[[nodiscard]] double mitigate(double e_g, const NoiseParams &np, double gamma);

/// Measured values this far below e_true count as round-off and give p = 0.
inline constexpr double kRateTolerance = 1e-12;

/// p = 1 - ((1 - e_measured) / (1 - e_true))^(1 / (2d)).
/// Throws NegativeRate when e_measured < e_true - kRateTolerance.
[[nodiscard]] double estimate_p(double e_measured, double e_true,
                                std::size_t d);

} // namespace qhopm
