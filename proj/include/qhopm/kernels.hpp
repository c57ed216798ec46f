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
 * Dense-amplitude kernels shared by the tensor contractions and the
 * statevector simulator.
 *
 * Every kernel exists twice: `serial` is the reference loop kept for testing,
 * `omp` is the OpenMP version used by the library. Both produce bit-identical
 * results: the parallel loops are elementwise, and the one reduction sums
 * fixed-size blocks in a fixed order regardless of the thread count.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace qhopm::kernels {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
    Complex m00, m01, m10, m11;
};

/// Below this many amplitudes the OpenMP kernels run on one thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// Number of blocks the deterministic reduction splits its input into.
inline constexpr std::size_t kReductionBlocks = 64;

namespace serial {

/// Applies `m` to the bit at position `target_bit` of every basis index whose
/// bits under `control_mask` are all set.
void apply_1q(std::span<Complex> amps, unsigned target_bit, const Mat2 &m,
              std::uint64_t control_mask);

/// out[h] = w0 * in[2h] + w1 * in[2h + 1]; contracts the least significant
/// index. `out.size()` must be `in.size() / 2`.
void fold_low(std::span<const Complex> in, std::span<Complex> out, Complex w0,
              Complex w1);

/// out[r] = w0 * in[r] + w1 * in[r + half]; contracts the most significant
/// index.
void fold_high(std::span<const Complex> in, std::span<Complex> out,
               Complex w0, Complex w1);

double norm_squared(std::span<const Complex> amps);

} // namespace serial

namespace omp {

void apply_1q(std::span<Complex> amps, unsigned target_bit, const Mat2 &m,
              std::uint64_t control_mask);
void fold_low(std::span<const Complex> in, std::span<Complex> out, Complex w0,
              Complex w1);
void fold_high(std::span<const Complex> in, std::span<Complex> out,
               Complex w0, Complex w1);
double norm_squared(std::span<const Complex> amps);

} // namespace omp

} // namespace qhopm::kernels
