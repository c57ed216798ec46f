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
#include "qhopm/rng.hpp"
#include "qhopm/tensor_core.hpp"
#include "test_util.hpp"

using namespace qhopm;
using qhopm::testing::phase_distance;
using std::numbers::pi;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

StateTensor ghz(std::size_t n) {
    std::vector<ComplexAmp> a(std::size_t{1} << n);
    a.front() = kS;
    a.back() = kS;
    return StateTensor(n, a);
}

QubitVector e0() { return {1.0, 0.0}; }
QubitVector plus() { return {kS, kS}; }

} // namespace

TEST_CASE("n_mode_product_skip examples") {
    const std::vector<QubitVector> zeros{e0(), e0()};
    const QubitVector u = n_mode_product_skip(ghz(2), zeros, 0);
    CHECK(std::abs(u.c0 - ComplexAmp(kS)) < 1e-15);
    CHECK(std::abs(u.c1) < 1e-15);

    const std::vector<QubitVector> pluses(3, plus());
    const QubitVector w = n_mode_product_skip(ghz(3), pluses, 0);
    const double expect = 1.0 / (2.0 * std::sqrt(2.0));
    CHECK(std::abs(w.c0 - ComplexAmp(expect)) < 1e-15);
    CHECK(std::abs(w.c1 - ComplexAmp(expect)) < 1e-15);

    // Basis contraction selects a fiber.
    Rng rng(1);
    const StateTensor t(3, testing::random_amps(8, rng));
    const std::vector<QubitVector> basis(3, e0());
    const QubitVector f = n_mode_product_skip(t, basis, 1);
    CHECK(f.c0 == t[0b000]);
    CHECK(f.c1 == t[0b010]);
}

TEST_CASE("n_mode_product_skip conjugates its vectors") {
    const std::vector<ComplexAmp> amps{0.0, ComplexAmp(0.0, 1.0), 0.0, 0.0};
    const StateTensor t(2, amps);
    const std::vector<QubitVector> vecs{e0(), {0.0, ComplexAmp(0.0, 1.0)}};
    const QubitVector u = n_mode_product_skip(t, vecs, 0);
    CHECK(std::abs(u.c0 - ComplexAmp(1.0)) < 1e-15);
}

TEST_CASE("contraction errors") {
    const std::vector<QubitVector> two(2, e0());
    CHECK_THROWS_AS(n_mode_product_skip(ghz(3), two, 0), ContractViolation);
    CHECK_THROWS_AS(full_contraction(ghz(3), two), ContractViolation);
    CHECK_THROWS_AS(n_mode_product_skip(ghz(2), two, 2), ContractViolation);
}

TEST_CASE("full_contraction examples") {
    const std::vector<QubitVector> zeros{e0(), e0()};
    CHECK(std::abs(full_contraction(ghz(2), zeros) - ComplexAmp(kS)) < 1e-15);
    const std::vector<QubitVector> pluses(3, plus());
    CHECK(std::abs(full_contraction(ghz(3), pluses) - ComplexAmp(0.5)) < 1e-15);

    Rng rng(2);
    std::vector<QubitVector> f;
    for (int i = 0; i < 4; ++i) f.push_back(random_qubit(rng));
    CHECK(std::abs(full_contraction(product_state(f), f)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalize") {
    const QubitVector a = normalize({2.0, 0.0});
    CHECK(std::abs(a.c0 - ComplexAmp(1.0)) < 1e-15);
    const QubitVector b = normalize({3.0, 3.0});
    CHECK(std::abs(b.c0 - ComplexAmp(kS)) < 1e-15);
    CHECK(std::abs(b.c1 - ComplexAmp(kS)) < 1e-15);
    try {
        (void)normalize({0.0, 0.0}, 4);
        FAIL("expected DegenerateUpdate");
    } catch (const DegenerateUpdate &e) {
        CHECK(e.mode() == 4);
    }
}

TEST_CASE("angles_to_vector examples") {
    const QubitVector z = angles_to_vector({0.0, 0.0});
    CHECK(std::abs(z.c0 - ComplexAmp(1.0)) < 1e-15);
    CHECK(std::abs(z.c1) < 1e-15);

    const QubitVector p = angles_to_vector({pi / 2, pi / 2});
    const ComplexAmp phase = std::polar(1.0, -pi / 4);
    CHECK(std::abs(p.c0 - phase * kS) < 1e-15);
    CHECK(std::abs(p.c1 - phase * kS) < 1e-15);

    const QubitVector r = angles_to_vector({pi / 2, 0.0});
    CHECK(phase_distance(r, {kS, ComplexAmp(0.0, -kS)}) < 1e-15);
    CHECK(r.norm() == doctest::Approx(1.0));
}

TEST_CASE("vector_to_angles examples") {
    const QubitAngles a = vector_to_angles(e0());
    CHECK(a.theta() == 0.0);
    CHECK(a.phi() == 0.0);

    const QubitAngles s = vector_to_angles({0.0, 1.0});
    CHECK(s.theta() == doctest::Approx(kThetaMax).epsilon(1e-15));
    CHECK(s.theta() < pi);
    CHECK(s.phi() == 0.0);

    const QubitAngles p = vector_to_angles(plus());
    CHECK(p.theta() == doctest::Approx(pi / 2).epsilon(1e-14));
    CHECK(p.phi() == doctest::Approx(pi / 2).epsilon(1e-14));

    CHECK_THROWS_AS(vector_to_angles({1.0, 1.0}), ContractViolation);
}

TEST_CASE("QubitAngles stays canonical") {
    Rng rng(7);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 500; ++i) {
        const double th = u(rng), ph = u(rng);
        const QubitAngles a(th, ph);
        CHECK(a.theta() >= 0.0);
        CHECK(a.theta() < pi);
        CHECK(a.phi() >= 0.0);
        CHECK(a.phi() < 2 * pi);
        // Folding the range must not change the encoded state.
        const double t = std::cos(th / 2), s = std::sin(th / 2);
        const QubitVector raw{std::polar(t, -ph / 2), ComplexAmp(0.0, -1.0) * std::polar(s, ph / 2)};
        CHECK(phase_distance(angles_to_vector(a), raw) < 1e-12);
    }
    CHECK_THROWS_AS(QubitAngles(std::nan(""), 0.0), ContractViolation);
}

TEST_CASE("round trip over 1000 random vectors") {
    Rng rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const QubitVector v = random_qubit(rng);
        worst = std::max(worst, phase_distance(angles_to_vector(vector_to_angles(v)), v));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("global phases on the factors do not change lambda") {
    Rng rng(31);
    std::uniform_real_distribution<double> ang(0.0, 2 * pi);
    for (int trial = 0; trial < 50; ++trial) {
        const StateTensor t = random_state(4, rng);
        std::vector<QubitVector> f, g;
        for (int i = 0; i < 4; ++i) {
            f.push_back(random_qubit(rng));
            const ComplexAmp ph = std::polar(1.0, ang(rng));
            g.push_back({ph * f.back().c0, ph * f.back().c1});
        }
        CHECK(std::abs(std::abs(full_contraction(t, f)) - std::abs(full_contraction(t, g))) < 1e-12);
    }
}

TEST_CASE("n_mode_product_skip is linear in the tensor") {
    Rng rng(8);
    const ComplexAmp alpha{0.3, -1.2}, beta{-0.7, 0.4};
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = testing::random_amps(16, rng);
        const auto b = testing::random_amps(16, rng);
        std::vector<ComplexAmp> c(16);
        for (std::size_t k = 0; k < 16; ++k) c[k] = alpha * a[k] + beta * b[k];
        std::vector<QubitVector> f;
        for (int i = 0; i < 4; ++i) f.push_back(random_qubit(rng));
        for (std::size_t skip = 0; skip < 4; ++skip) {
            const QubitVector ua = n_mode_product_skip(StateTensor(4, a), f, skip);
            const QubitVector ub = n_mode_product_skip(StateTensor(4, b), f, skip);
            const QubitVector uc = n_mode_product_skip(StateTensor(4, c), f, skip);
            CHECK(std::abs(uc.c0 - (alpha * ua.c0 + beta * ub.c0)) < 1e-12);
            CHECK(std::abs(uc.c1 - (alpha * ua.c1 + beta * ub.c1)) < 1e-12);
        }
    }
}

TEST_CASE("both contraction paths agree") {
    Rng rng(12);
    for (std::size_t n : {1u, 2u, 3u, 5u}) {
        const StateTensor t = random_state(n, rng);
        std::vector<QubitVector> f;
        for (std::size_t i = 0; i < n; ++i) f.push_back(random_qubit(rng));
        const ComplexAmp full = full_contraction(t, f);
        for (std::size_t i = 0; i < n; ++i) {
            const QubitVector u = n_mode_product_skip(t, f, i);
            const ComplexAmp via = std::conj(f[i].c0) * u.c0 + std::conj(f[i].c1) * u.c1;
            CHECK(std::abs(full - via) < 1e-12);
        }
    }
}

TEST_CASE("product_state is wire 0 most significant") {
    const std::vector<QubitVector> f{{0.0, 1.0}, e0()};
    const StateTensor t = product_state(f);
    CHECK(std::abs(t[0b10] - ComplexAmp(1.0)) < 1e-15);
    CHECK(t.is_normalized());
}

TEST_CASE("StateTensor validation") {
    CHECK_THROWS_AS(StateTensor(2, std::vector<ComplexAmp>(3)), ContractViolation);
    const StateTensor z(3);
    CHECK(z[0] == ComplexAmp(1.0));
    CHECK(z.norm() == 1.0);
}
