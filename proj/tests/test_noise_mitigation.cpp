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
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "qhopm/errors.hpp"
#include "qhopm/noise_mitigation.hpp"

using namespace qhopm;
using std::numbers::pi;

namespace {

std::vector<double> grid(double lo, double hi, int steps) {
    std::vector<double> v;
    for (int i = 0; i <= steps; ++i) v.push_back(lo + (hi - lo) * i / steps);
    return v;
}

} // namespace

TEST_CASE("noise parameters") {
    const NoiseParams np{0.1, 3};
    CHECK(np.q() == doctest::Approx(0.9));
    CHECK(np.eta() == doctest::Approx(0.19));
    CHECK_THROWS_AS((NoiseParams{-0.1, 1}.validate()), ContractViolation);
    CHECK_THROWS_AS((NoiseParams{1.1, 1}.validate()), ContractViolation);
}

TEST_CASE("noisy lambda law") {
    for (double p : {0.0, 0.01, 0.07}) {
        for (std::size_t d : {1u, 11u, 25u}) {
            for (double g : grid(0.0, 2 * pi, 12)) {
                const NoiseParams np{p, d};
                const double q = 1.0 - p, eta = 1.0 - q * q;
                const double expect = std::pow(q, d) * std::sqrt(1.0 - eta * std::pow(std::sin(g), 2)) * 0.6;
                CHECK(noisy_lambda(0.6, np, g) == doctest::Approx(expect).epsilon(1e-14));
                CHECK(attenuation(np, g) == doctest::Approx(expect * expect / 0.36).epsilon(1e-14));
            }
        }
    }
    CHECK(noisy_lambda(1.0 / std::sqrt(2.0), NoiseParams{0.01, 11}, 0.0) ==
          doctest::Approx(std::pow(0.99, 11) / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("mitigation is the identity at p = 0") {
    for (double e : grid(0.0, 0.99, 33)) CHECK(mitigate(e, NoiseParams{0.0, 7}, 1.3) == e);
}

TEST_CASE("mitigation inverts the noise over the full grid") {
    double worst = 0.0;
    for (double e : grid(0.0, 0.999, 37))
        for (double p : grid(0.0, 0.1, 20))
            for (std::size_t d : {1u, 2u, 3u, 5u, 8u, 11u, 16u, 22u, 30u, 40u})
                for (double g : grid(0.0, 2 * pi * 0.999, 24)) {
                    const NoiseParams np{p, d};
                    worst = std::max(worst, std::abs(mitigate(noisy_e_g(e, np, g), np, g) - e));
                }
    CHECK(worst < 1e-12);
}

TEST_CASE("mitigated value never exceeds the measured one") {
    for (double e : grid(0.0, 0.999, 20))
        for (double p : {0.001, 0.01, 0.05, 0.1})
            for (std::size_t d : {1u, 10u, 40u})
                for (double g : {0.0, 0.5, 2.0})
                    CHECK(mitigate(e, NoiseParams{p, d}, g) <= e);
}

TEST_CASE("mitigation clamps and guards") {
    CHECK(mitigate(0.0, NoiseParams{0.05, 10}, 0.0) == 0.0);
    CHECK_THROWS_AS(mitigate(1.2, NoiseParams{0.05, 10}, 0.0), ContractViolation);
    CHECK_THROWS_AS(mitigate(0.5, NoiseParams{1.0, 10}, 0.0), MitigationOverflow);
}

TEST_CASE("rate estimate") {
    CHECK(estimate_p(0.5, 0.5, 11) == 0.0);
    for (double p : {0.001, 0.01, 0.05})
        for (std::size_t d : {1u, 8u, 11u}) {
            const double e = noisy_e_g(0.5, NoiseParams{p, d}, 0.0);
            CHECK(std::abs(estimate_p(e, 0.5, d) - p) < 1e-12);
        }
    double prev = -1.0;
    for (double e : grid(0.5, 0.99, 40)) {
        const double p = estimate_p(e, 0.5, 6);
        CHECK(p > prev);
        prev = p;
    }
    CHECK_THROWS_AS(estimate_p(0.45, 0.5, 8), NegativeRate);
    CHECK_THROWS_AS(estimate_p(0.6, 0.5, 0), ContractViolation);
    CHECK_THROWS_AS(estimate_p(1.0, 0.5, 3), ContractViolation);
}
