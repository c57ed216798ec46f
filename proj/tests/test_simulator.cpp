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

#include "qhopm/circuits.hpp"
#include "qhopm/errors.hpp"
#include "qhopm/rng.hpp"
#include "qhopm/simulator.hpp"

using namespace qhopm;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

/// Random W = (random target) then V_i^dagger, the shape every QHOPM measurement has.
Circuit random_w(std::size_t n, std::uint64_t seed, std::optional<std::size_t> skip) {
    Rng rng(seed);
    const auto angles = random_angles(n, rng);
    const Circuit v = skip ? build_separable_skip(angles, *skip) : build_separable(angles);
    return compose(build_target({TargetFamily::RANDOM, n, seed}), adjoint(v));
}

} // namespace

TEST_CASE("run") {
    const StateTensor e = run(Circuit(3));
    CHECK(e[0] == ComplexAmp(1.0));
    const StateTensor off = run(controlled(build_target({TargetFamily::GHZ, 2, {}})));
    CHECK(std::abs(off[0] - ComplexAmp(1.0)) < 1e-15);
    StateTensor wrong(2);
    CHECK_THROWS_AS(apply(Circuit(3), wrong), ContractViolation);
}

TEST_CASE("overlap_amplitude") {
    const Circuit ghz2 = build_target({TargetFamily::GHZ, 2, {}});
    CHECK(std::abs(overlap_amplitude(ghz2, std::nullopt, 0) - ComplexAmp(kS)) < 1e-15);
    CHECK(std::abs(overlap_amplitude(Circuit(2), 0, 1)) < 1e-15);
    CHECK(selector_index(3, 0, 1) == 0b100);
    CHECK(selector_index(3, 2, 1) == 0b001);
    CHECK(selector_index(3, std::nullopt, 0) == 0);
    CHECK_THROWS_AS(selector_index(3, 3, 1), ContractViolation);
    CHECK_THROWS_AS(selector_index(3, 0, 2), ContractViolation);
}

TEST_CASE("overlap_amplitude equals the n-mode product") {
    const Circuit u = build_target({TargetFamily::GHZ, 3, {}});
    const StateTensor psi = run(u);
    Rng rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const auto angles = random_angles(3, rng);
        const std::size_t i = static_cast<std::size_t>(trial % 3);
        const Circuit w = compose(u, adjoint(build_separable_skip(angles, i)));
        const QubitVector ref = n_mode_product_skip(psi, to_vectors(angles), i);
        CHECK(std::abs(overlap_amplitude(w, i, 0) - ref.c0) < 1e-12);
        CHECK(std::abs(overlap_amplitude(w, i, 1) - ref.c1) < 1e-12);
    }
}

TEST_CASE("hadamard test exact") {
    auto backend = MeasurementBackend::exact();
    const auto id = hadamard_test(Circuit(2), std::nullopt, 0, backend);
    CHECK(id.x == doctest::Approx(1.0));
    CHECK(id.y == doctest::Approx(0.0));
    CHECK(backend.settings_used() == 2);
    const auto ref = full_hadamard_test_reference(Circuit(2), std::nullopt, 0);
    CHECK(ref.x == doctest::Approx(1.0));
    CHECK(std::abs(ref.y) < 1e-15);
    const auto g = full_hadamard_test_reference(build_target({TargetFamily::GHZ, 2, {}}), std::nullopt, 0);
    CHECK(g.x == doctest::Approx(kS).epsilon(1e-14));
    CHECK(std::abs(g.y) < 1e-15);
}

TEST_CASE("shortcut matches the full controlled circuit") {
    double worst = 0.0;
    int cases = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 1 + seed % 4;
        const std::optional<std::size_t> wire =
            seed % 3 == 0 ? std::nullopt : std::optional<std::size_t>(seed % n);
        const Circuit w = random_w(n, seed, wire);
        for (int s : {0, 1}) {
            if (!wire && s == 1) continue;
            auto backend = MeasurementBackend::exact();
            const auto fast = hadamard_test(w, wire, s, backend);
            const auto full = full_hadamard_test_reference(w, wire, s);
            worst = std::max({worst, std::abs(fast.x - full.x), std::abs(fast.y - full.y)});
            CHECK(fast.x * fast.x + fast.y * fast.y <= 1.0 + 1e-12);
            ++cases;
        }
    }
    CHECK(cases >= 100);
    CHECK(worst < 1e-12);
}

TEST_CASE("effective depth") {
    Rng rng(1);
    const Circuit v9 = build_separable(random_angles(9, rng));
    CHECK(effective_depth(compose(build_target({TargetFamily::GHZ, 9, {}}), adjoint(v9))) == 11);
    CHECK(effective_depth(Circuit(3)) == 0);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const std::size_t n = 3 + s % 4;
        const Circuit w = compose(build_target({TargetFamily::RANDOM, n, s}),
                                  adjoint(build_separable(random_angles(n, rng))));
        CHECK(effective_depth(w) == 12);
        CHECK(effective_depth(controlled(w)) == 12);
    }
}

TEST_CASE("depolarizing attenuation") {
    auto backend = MeasurementBackend::exact();
    backend.with_noise(DepolarizingNoise{0.01, true, std::nullopt});
    StateTensor one(1);
    const auto a = hadamard_test(one, 10, std::nullopt, 0, backend);
    CHECK(a.x == doctest::Approx(std::pow(0.99, 10)).epsilon(1e-15));
    CHECK(a.y == 0.0);

    // Y sees one more layer than X.
    const ComplexAmp amp = std::polar(0.8, 0.7);
    const StateTensor psi(1, std::vector<ComplexAmp>{amp, std::sqrt(1 - 0.64)});
    const auto b = hadamard_test(psi, 4, std::nullopt, 0, backend);
    CHECK(b.x == doctest::Approx(std::pow(0.99, 4) * amp.real()).epsilon(1e-14));
    CHECK(b.y == doctest::Approx(std::pow(0.99, 5) * amp.imag()).epsilon(1e-14));

    auto quiet = MeasurementBackend::exact();
    quiet.with_noise(DepolarizingNoise{0.2, false, std::nullopt});
    const auto t = hadamard_test(psi, 4, 0, 0, quiet);
    CHECK(t.x == doctest::Approx(amp.real()).epsilon(1e-14));
    const auto l = hadamard_test(psi, 4, std::nullopt, 0, quiet);
    CHECK(l.x == doctest::Approx(std::pow(0.8, 4) * amp.real()).epsilon(1e-14));

    auto forced = MeasurementBackend::exact();
    forced.with_noise(DepolarizingNoise{0.1, true, 20});
    CHECK(forced.noise_depth(build_target({TargetFamily::GHZ, 9, {}})) == 20);

    CHECK_THROWS_AS(backend.with_noise(DepolarizingNoise{1.5, true, std::nullopt}), ContractViolation);
    CHECK_THROWS_AS(MeasurementBackend::sampled(0, 1), ContractViolation);
}

TEST_CASE("shot estimates concentrate at the binomial scale") {
    const StateTensor zero_overlap(1, std::vector<ComplexAmp>{0.0, 1.0});
    int inside = 0;
    for (std::uint64_t rep = 0; rep < 100; ++rep) {
        auto backend = MeasurementBackend::sampled(100000, derive_seed(7, rep));
        const auto e = hadamard_test(zero_overlap, 0, std::nullopt, 0, backend);
        inside += std::abs(e.x) < 0.01 ? 1 : 0;
    }
    CHECK(inside >= 99);
}

TEST_CASE("shot estimator is unbiased") {
    for (double v : {-0.9, -0.3, 0.0, 0.45, 1.0}) {
        auto backend = MeasurementBackend::sampled(1000, 12345);
        const int reps = 4000;
        double sum = 0.0;
        for (int r = 0; r < reps; ++r) sum += backend.sample(v);
        const double mean = sum / reps;
        // 5 sigma of the mean of reps * shots outcomes.
        const double sigma = std::sqrt((1 - v * v) / (1000.0 * reps));
        CHECK(std::abs(mean - v) <= 5 * sigma + 1e-15);
    }
    auto backend = MeasurementBackend::sampled(10, 3);
    for (int r = 0; r < 100; ++r) {
        const double s = backend.sample(0.2);
        CHECK(s >= -1.0);
        CHECK(s <= 1.0);
    }
}

TEST_CASE("identical seeds give identical streams") {
    auto a = MeasurementBackend::sampled(500, 99);
    auto b = MeasurementBackend::sampled(500, 99);
    for (int r = 0; r < 50; ++r) CHECK(a.sample(0.3) == b.sample(0.3));
}
