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

#include "qhopm/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qhopm/errors.hpp"
#include "qhopm/kernels.hpp"

namespace qhopm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod can return exactly 2*pi after the shift for tiny negative input.
    return r >= kTwoPi ? 0.0 : r;
}

void check_factor_count(const StateTensor &tensor,
                        std::span<const QubitVector> vecs) {
    if (vecs.size() != tensor.qubits()) {
        throw ContractViolation("expected " + std::to_string(tensor.qubits()) +
                                " factors, got " + std::to_string(vecs.size()));
    }
}

} // namespace

double QubitVector::norm() const {
    return std::sqrt(std::norm(c0) + std::norm(c1));
}

QubitAngles::QubitAngles(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw ContractViolation("QubitAngles: non-finite angle");
    }
    theta = wrap_two_pi(theta);
    if (theta > std::numbers::pi) {
        // Rx(2pi - t)|0> equals Rx(t)|0> with the sign of the |1> component
        // flipped, which an extra half turn of Rz restores.
        theta = kTwoPi - theta;
        phi += std::numbers::pi;
    }
    theta_ = std::min(theta, kThetaMax);
    phi_ = wrap_two_pi(phi);
}

StateTensor::StateTensor(std::size_t n)
    : n_(n), amps_(std::size_t{1} << n, ComplexAmp{0.0, 0.0}) {
    if (n == 0 || n > 30) {
        throw ContractViolation("StateTensor: qubit count out of range");
    }
    amps_[0] = 1.0;
}

StateTensor::StateTensor(std::size_t n, std::vector<ComplexAmp> amps)
    : n_(n), amps_(std::move(amps)) {
    if (n == 0 || n > 30 || amps_.size() != (std::size_t{1} << n)) {
        throw ContractViolation("StateTensor: need exactly 2^n amplitudes");
    }
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ContractViolation("StateTensor: non-finite amplitude");
        }
    }
}

double StateTensor::norm() const {
    return std::sqrt(kernels::omp::norm_squared(amps_));
}

bool StateTensor::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

QubitVector n_mode_product_skip(const StateTensor &tensor,
                                std::span<const QubitVector> vecs,
                                std::size_t skip) {
    check_factor_count(tensor, vecs);
    const std::size_t n = tensor.qubits();
    if (skip >= n) {
        throw ContractViolation("n_mode_product_skip: skip index out of range");
    }

    // Fold the modes after `skip` from the least significant end, then the
    // modes before it from the most significant end; two entries remain.
    std::vector<ComplexAmp> a;
    std::vector<ComplexAmp> b;
    std::span<const ComplexAmp> current = tensor.amps();
    auto fold = [&](bool low, const QubitVector &v) {
        auto &dst = (current.data() == a.data()) ? b : a;
        dst.resize(current.size() / 2);
        if (low) {
            kernels::omp::fold_low(current, dst, std::conj(v.c0),
                                   std::conj(v.c1));
        } else {
            kernels::omp::fold_high(current, dst, std::conj(v.c0),
                                    std::conj(v.c1));
        }
        current = dst;
    };
    for (std::size_t j = n; j-- > skip + 1;) {
        fold(true, vecs[j]);
    }
    for (std::size_t j = 0; j < skip; ++j) {
        fold(false, vecs[j]);
    }
    return QubitVector{current[0], current[1]};
}

ComplexAmp full_contraction(const StateTensor &tensor,
                            std::span<const QubitVector> vecs) {
    check_factor_count(tensor, vecs);
    std::vector<ComplexAmp> a(tensor.size() / 2);
    std::vector<ComplexAmp> b(tensor.size() / 2);
    kernels::omp::fold_low(tensor.amps(), a, std::conj(vecs.back().c0),
                           std::conj(vecs.back().c1));
    std::size_t len = a.size();
    for (std::size_t j = tensor.qubits() - 1; j-- > 0;) {
        kernels::omp::fold_low(std::span<const ComplexAmp>(a.data(), len),
                               std::span<ComplexAmp>(b.data(), len / 2),
                               std::conj(vecs[j].c0), std::conj(vecs[j].c1));
        len /= 2;
        std::swap(a, b);
    }
    return a[0];
}

QubitVector normalize(const QubitVector &u, std::size_t mode) {
    const double nsq = std::norm(u.c0) + std::norm(u.c1);
    if (!(nsq >= kDegenerateNormSq)) {
        throw DegenerateUpdate(mode);
    }
    const double inv = 1.0 / std::sqrt(nsq);
    return QubitVector{u.c0 * inv, u.c1 * inv};
}

QubitVector angles_to_vector(const QubitAngles &angles) {
    const double half_theta = 0.5 * angles.theta();
    const double half_phi = 0.5 * angles.phi();
    const ComplexAmp minus_i{0.0, -1.0};
    return QubitVector{std::polar(std::cos(half_theta), -half_phi),
                       minus_i * std::polar(std::sin(half_theta), half_phi)};
}

QubitAngles vector_to_angles(const QubitVector &v) {
    if (std::abs(v.norm() - 1.0) > 1e-9) {
        throw ContractViolation("vector_to_angles: input is not normalized");
    }
    const double theta = 2.0 * std::atan2(std::abs(v.c1), std::abs(v.c0));
    if (std::sin(theta) < kPoleSin) {
        return QubitAngles(theta, 0.0);
    }
    const double phi =
        std::arg(v.c1) - std::arg(v.c0) + 0.5 * std::numbers::pi;
    return QubitAngles(theta, phi);
}

StateTensor product_state(std::span<const QubitVector> vecs) {
    if (vecs.empty()) {
        throw ContractViolation("product_state: no factors");
    }
    std::vector<ComplexAmp> amps{vecs[0].c0, vecs[0].c1};
    for (std::size_t j = 1; j < vecs.size(); ++j) {
        std::vector<ComplexAmp> next(amps.size() * 2);
        for (std::size_t h = 0; h < amps.size(); ++h) {
            next[2 * h] = amps[h] * vecs[j].c0;
            next[2 * h + 1] = amps[h] * vecs[j].c1;
        }
        amps = std::move(next);
    }
    return StateTensor(vecs.size(), std::move(amps));
}

double overlap_modulus(const QubitVector &a, const QubitVector &b) {
    return std::abs(std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1);
}

std::vector<QubitVector> to_vectors(std::span<const QubitAngles> angles) {
    std::vector<QubitVector> out;
    out.reserve(angles.size());
    for (const auto &a : angles) {
        out.push_back(angles_to_vector(a));
    }
    return out;
}

} // namespace qhopm
