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
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qhopm/rng.hpp"
#include "qhopm/tensor_core.hpp"

namespace qhopm::testing {

/// |<a|b>| = 1 for normalized a, b: equal up to global phase.
inline double phase_distance(const QubitVector &a, const QubitVector &b) {
    const ComplexAmp inner = std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1;
    return std::abs(1.0 - std::abs(inner));
}

inline std::vector<ComplexAmp> random_amps(std::size_t size, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<ComplexAmp> v(size);
    for (auto &a : v) a = {g(rng), g(rng)};
    return v;
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace qhopm::testing
