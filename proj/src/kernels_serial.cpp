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

#include "qhopm/kernels.hpp"

#include <cassert>

namespace qhopm::kernels::serial {

void apply_1q(std::span<Complex> amps, unsigned target_bit, const Mat2 &m,
              std::uint64_t control_mask) {
    const std::uint64_t mask = std::uint64_t{1} << target_bit;
    const std::uint64_t lo_mask = mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
    const std::uint64_t half = amps.size() / 2;

    for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = ((k & hi_mask) << 1) | (k & lo_mask);
        if ((i0 & control_mask) != control_mask) {
            continue;
        }
        const std::uint64_t i1 = i0 | mask;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = m.m00 * a0 + m.m01 * a1;
        amps[i1] = m.m10 * a0 + m.m11 * a1;
    }
}

void fold_low(std::span<const Complex> in, std::span<Complex> out, Complex w0,
              Complex w1) {
    assert(out.size() * 2 == in.size());
    for (std::size_t h = 0; h < out.size(); ++h) {
        out[h] = w0 * in[2 * h] + w1 * in[2 * h + 1];
    }
}

void fold_high(std::span<const Complex> in, std::span<Complex> out,
               Complex w0, Complex w1) {
    assert(out.size() * 2 == in.size());
    const std::size_t half = out.size();
    for (std::size_t r = 0; r < half; ++r) {
        out[r] = w0 * in[r] + w1 * in[r + half];
    }
}

double norm_squared(std::span<const Complex> amps) {
    // Same blocking as the parallel version so the two agree bit for bit.
    const std::size_t n = amps.size();
    const std::size_t blocks = n < kReductionBlocks ? 1 : kReductionBlocks;
    const std::size_t chunk = n / blocks;
    double total = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
        double partial = 0.0;
        const std::size_t end = (b + 1 == blocks) ? n : (b + 1) * chunk;
        for (std::size_t i = b * chunk; i < end; ++i) {
            partial += std::norm(amps[i]);
        }
        total += partial;
    }
    return total;
}

} // namespace qhopm::kernels::serial
