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
 * Dense n-qubit tensors, single-qubit factors and the angle encoding
 * |v> = Rz(phi) Rx(theta) |0> used throughout the project.
 *
 * Basis order is |b_0 b_1 ... b_{n-1}> with wire 0 the most significant bit
 * of the amplitude index. All wire/mode indices in the public API are
 * 0-based.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace qhopm {

using ComplexAmp = std::complex<double>;

/// Squared norm below which a contraction is treated as the zero vector.
inline constexpr double kDegenerateNormSq = 1e-18;

/// Largest representable polar angle; theta = pi is mapped here.
inline constexpr double kThetaMax = std::numbers::pi - 1e-12;

/// Below this sin(theta) the azimuth is undefined and fixed to 0.
inline constexpr double kPoleSin = 1e-9;

struct QubitVector {
    ComplexAmp c0{1.0, 0.0};
    ComplexAmp c1{0.0, 0.0};

    [[nodiscard]] double norm() const;
    [[nodiscard]] ComplexAmp operator[](std::size_t b) const {
        return b == 0 ? c0 : c1;
    }
};

/// Canonical (theta, phi) pair with theta in [0, pi) and phi in [0, 2*pi).
///
/// Out-of-range input is folded back without changing the encoded state
/// beyond a global phase: theta is taken modulo 2*pi, the half turn
/// theta -> 2*pi - theta is compensated by phi -> phi + pi, and the south
/// pole is clamped to kThetaMax.
class QubitAngles {
  public:
    QubitAngles() = default;
    QubitAngles(double theta, double phi);

    [[nodiscard]] double theta() const noexcept { return theta_; }
    [[nodiscard]] double phi() const noexcept { return phi_; }

    friend bool operator==(const QubitAngles &, const QubitAngles &) = default;

  private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

/// 2^n complex amplitudes; doubles as the tensor T_psi and the statevector.
class StateTensor {
  public:
    /// |0...0> on n qubits.
    explicit StateTensor(std::size_t n);
    StateTensor(std::size_t n, std::vector<ComplexAmp> amps);

    [[nodiscard]] std::size_t qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const ComplexAmp> amps() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<ComplexAmp> amps() noexcept { return amps_; }
    [[nodiscard]] ComplexAmp operator[](std::size_t index) const {
        return amps_[index];
    }

    [[nodiscard]] double norm() const;
    [[nodiscard]] bool is_normalized(double tol = 1e-12) const;

  private:
    std::size_t n_;
    std::vector<ComplexAmp> amps_;
};

/// u_b = sum psi_{..b..} prod_{j != skip} conj(v_j[b_j]); not normalized.
[[nodiscard]] QubitVector n_mode_product_skip(const StateTensor &tensor,
                                              std::span<const QubitVector> vecs,
                                              std::size_t skip);

/// <phi|psi> for phi = v_0 (x) ... (x) v_{n-1}. |result| is lambda.
[[nodiscard]] ComplexAmp full_contraction(const StateTensor &tensor,
                                          std::span<const QubitVector> vecs);

/// u / |u|; throws DegenerateUpdate(mode) when |u|^2 < kDegenerateNormSq.
[[nodiscard]] QubitVector normalize(const QubitVector &u, std::size_t mode = 0);

/// Rz(phi) Rx(theta) |0> with Rz = diag(e^{-i phi/2}, e^{i phi/2}).
[[nodiscard]] QubitVector angles_to_vector(const QubitAngles &angles);

/// Inverse of angles_to_vector up to global phase. Requires |v| within 1e-9
/// of 1.
[[nodiscard]] QubitAngles vector_to_angles(const QubitVector &v);

/// Kronecker product v_0 (x) ... (x) v_{n-1}.
[[nodiscard]] StateTensor product_state(std::span<const QubitVector> vecs);

/// |<a|b>| for single-qubit vectors.
[[nodiscard]] double overlap_modulus(const QubitVector &a,
                                     const QubitVector &b);

[[nodiscard]] std::vector<QubitVector>
to_vectors(std::span<const QubitAngles> angles);

} // namespace qhopm
