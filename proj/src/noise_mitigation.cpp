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

#include "qhopm/noise_mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhopm/errors.hpp"

namespace qhopm {

void NoiseParams::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ContractViolation("noise rate must lie in [0, 1]");
    }
}

double attenuation(const NoiseParams &np, double gamma) {
    np.validate();
    const double s = std::sin(gamma);
    return std::pow(np.q(), 2.0 * static_cast<double>(np.d)) *
           (1.0 - np.eta() * s * s);
}

double noisy_lambda(double lambda_true, const NoiseParams &np, double gamma) {
    return std::sqrt(attenuation(np, gamma)) * lambda_true;
}

double noisy_e_g(double e_true, const NoiseParams &np, double gamma) {
    return 1.0 - attenuation(np, gamma) * (1.0 - e_true);
}

double mitigate(double e_g, const NoiseParams &np, double gamma) {
    if (!(e_g >= 0.0 && e_g <= 1.0)) {
        throw ContractViolation("mitigate: E_G must lie in [0, 1]");
    }
    np.validate();
    if (np.p == 0.0) {
        return e_g;
    }
    const double a = attenuation(np, gamma);
    if (!(a > 0.0)) {
        throw MitigationOverflow("mitigate: noise attenuation is zero at p = " +
                                 std::to_string(np.p) +
                                 ", d = " + std::to_string(np.d));
    }
    return std::max(0.0, 1.0 - (1.0 - e_g) / a);
}

double estimate_p(double e_measured, double e_true, std::size_t d) {
    if (d < 1) {
        throw ContractViolation("estimate_p: depth must be >= 1");
    }
    if (!(e_true >= 0.0 && e_measured < 1.0)) {
        throw ContractViolation("estimate_p: need 0 <= e_true and e_measured < 1");
    }
    if (e_measured < e_true - kRateTolerance) {
        throw NegativeRate("measured E_G " + std::to_string(e_measured) +
                           " is below the reference " + std::to_string(e_true) +
                           "; check that the reference is a GHZ state and that "
                           "the run converged (more shots or inits may help)");
    }
    if (e_measured <= e_true) {
        return 0.0;
    }
    const double ratio = (1.0 - e_measured) / (1.0 - e_true);
    return 1.0 - std::pow(ratio, 1.0 / (2.0 * static_cast<double>(d)));
}

} // namespace qhopm
