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

#include "qhopm/rng.hpp"

#include <cmath>
#include <numbers>

namespace qhopm {

std::vector<QubitAngles> random_angles(std::size_t n, Rng &rng) {
    std::uniform_real_distribution<double> theta(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
    std::vector<QubitAngles> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = theta(rng);
        out.emplace_back(t, phi(rng));
    }
    return out;
}

StateTensor random_state(std::size_t n, Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<ComplexAmp> amps(std::size_t{1} << n);
    double nsq = 0.0;
    for (auto &a : amps) {
        const double re = g(rng);
        a = ComplexAmp(re, g(rng));
        nsq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(nsq);
    for (auto &a : amps) {
        a *= inv;
    }
    return StateTensor(n, std::move(amps));
}

QubitVector random_qubit(Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double a = g(rng);
    const double b = g(rng);
    const double c = g(rng);
    const double d = g(rng);
    return normalize(QubitVector{{a, b}, {c, d}});
}

} // namespace qhopm
