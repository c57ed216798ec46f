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
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "qhopm/circuits.hpp"
#include "qhopm/errors.hpp"
#include "qhopm/qhopm.hpp"
#include "qhopm/rng.hpp"
#include "qhopm/simulator.hpp"
#include "qhopm/tomography.hpp"
#include "test_util.hpp"

using namespace qhopm;
using std::numbers::pi;

namespace {

/// Angle between the Bloch vectors of two pure states.
double bloch_angle(const QubitVector &a, const QubitVector &b) {
    const double overlap = std::abs(std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1);
    return 2.0 * std::acos(std::min(1.0, overlap));
}

} // namespace

TEST_CASE("single-qubit round trip") {
    const std::vector<QubitAngles> a{QubitAngles(pi / 3, pi / 5)};
    auto backend = MeasurementBackend::exact();
    const TomographyResult r = recover_qubit(build_separable(a), 0, backend);
    CHECK(r.angles.theta() == doctest::Approx(pi / 3).epsilon(1e-12));
    CHECK(r.angles.phi() == doctest::Approx(pi / 5).epsilon(1e-12));
    CHECK(std::norm(r.c0) + std::norm(r.c1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.raw_norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(backend.settings_used() == kSettingsPerTomography);
}

TEST_CASE("GHZ3 equal-weight point") {
    const std::vector<QubitAngles> plus(3, QubitAngles(pi / 2, pi / 2));
    const Circuit w = compose(build_target({TargetFamily::GHZ, 3, {}}),
                              adjoint(build_separable_skip(plus, 0)));
    auto backend = MeasurementBackend::exact();
    const TomographyResult r = recover_qubit(w, 0, backend);
    CHECK(std::abs(std::abs(r.c0) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(std::abs(r.c1) - 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("angles recovered from random product circuits") {
    Rng rng(31);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        const auto angles = random_angles(n, rng);
        const std::size_t i = static_cast<std::size_t>(trial) % n;
        auto backend = MeasurementBackend::exact();
        const TomographyResult r = recover_qubit(build_separable(angles), i, backend);
        worst = std::max({worst, std::abs(r.angles.theta() - angles[i].theta()),
                          std::abs(std::remainder(r.angles.phi() - angles[i].phi(), 2 * pi))});
        CHECK(testing::phase_distance(angles_to_vector(r.angles), {r.c0, r.c1}) < 1e-9);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("state overload agrees with the circuit overload") {
    const Circuit w = compose(build_target({TargetFamily::RANDOM, 4, 3}),
                              adjoint(build_separable_skip(std::vector<QubitAngles>(4, QubitAngles(0.4, 1.0)), 2)));
    auto a = MeasurementBackend::exact();
    auto b = MeasurementBackend::exact();
    const auto ra = recover_qubit(w, 2, a);
    const auto rb = recover_qubit(run(w), effective_depth(w), 2, b);
    CHECK(ra.angles == rb.angles);
    CHECK(a.settings_used() == b.settings_used());
}

TEST_CASE("degenerate tomography") {
    Circuit w(2);
    w.x(1);
    auto backend = MeasurementBackend::exact();
    try {
        (void)recover_qubit(w, 0, backend);
        FAIL("expected DegenerateUpdate");
    } catch (const DegenerateUpdate &e) {
        CHECK(e.mode() == 0);
    }
    CHECK_THROWS_AS(recover_qubit(w, 2, backend), ContractViolation);
}

TEST_CASE("shot-noise angle error") {
    std::vector<double> err;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 2 + seed % 3;
        Rng rng(seed);
        const auto angles = random_angles(n, rng);
        const std::size_t i = seed % n;
        const Circuit w = compose(build_target({TargetFamily::RANDOM, n, seed + 1}),
                                  adjoint(build_separable_skip(angles, i)));
        auto exact = MeasurementBackend::exact();
        auto shots = MeasurementBackend::sampled(100000, derive_seed(seed, 1));
        try {
            const auto a = recover_qubit(w, i, exact);
            const auto b = recover_qubit(w, i, shots);
            err.push_back(bloch_angle({a.c0, a.c1}, {b.c0, b.c1}));
        } catch (const DegenerateUpdate &) {
        }
    }
    REQUIRE(err.size() >= 90);
    CHECK(median(err) < 0.02);
}

TEST_CASE("expectation system") {
    const QubitAngles z = solve_angles_via_expectations(-1.0, 0.0, 0.0);
    CHECK(z.theta() == 0.0);
    CHECK(z.phi() == 0.0);
    const QubitAngles one = solve_angles_via_expectations(1.0, 0.0, 0.0);
    CHECK(one.theta() == doctest::Approx(kThetaMax));
    CHECK(one.phi() == 0.0);

    const BlochReadout r = readout_of(angles_to_vector({pi / 2, pi / 2}));
    const QubitAngles p = solve_angles_via_expectations(r.z, r.x, r.y);
    CHECK(p.theta() == doctest::Approx(pi / 2).epsilon(1e-12));
    CHECK(p.phi() == doctest::Approx(pi / 2).epsilon(1e-12));

    Rng rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        const QubitVector v = random_qubit(rng);
        const BlochReadout b = readout_of(v);
        CHECK(b.z == doctest::Approx(-std::cos(vector_to_angles(v).theta())).epsilon(1e-12));
        const QubitAngles a = solve_angles_via_expectations(b.z, b.x, b.y);
        CHECK(testing::phase_distance(angles_to_vector(a), v) < 1e-10);
    }
}

TEST_CASE("tomography noise obeys the first-order probability bound") {
    Rng rng(2);
    std::uniform_real_distribution<double> pu(0.0, 0.1);
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 2 + seed % 3;
        const auto angles = random_angles(n, rng);
        const std::size_t i = seed % n;
        const Circuit w = compose(build_target({TargetFamily::RANDOM, n, seed}),
                                  adjoint(build_separable_skip(angles, i)));
        const double p = pu(rng);
        const double q = 1.0 - p, eta = 1.0 - q * q;
        auto clean = MeasurementBackend::exact();
        auto noisy = MeasurementBackend::exact();
        noisy.with_noise(DepolarizingNoise{p, true, std::nullopt});
        try {
            const auto a = recover_qubit(w, i, clean);
            const auto b = recover_qubit(w, i, noisy);
            const double p0 = std::norm(a.c0), p1 = std::norm(a.c1);
            const double bound = eta * p0 * p1 / (1.0 - eta);
            CHECK(std::abs(std::norm(b.c0) - p0) <= bound + 1e-12);
            CHECK(std::abs(std::norm(b.c1) - p1) <= bound + 1e-12);
            ++checked;
        } catch (const DegenerateUpdate &) {
        }
    }
    CHECK(checked >= 150);
}
