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

#include <array>
#include <cassert>
#include <cstdint>

namespace qhopm::kernels::omp {

void apply_1q(std::span<Complex> amps, unsigned target_bit, const Mat2 &m,
              std::uint64_t control_mask) {
    const std::uint64_t mask = std::uint64_t{1} << target_bit;
    const std::uint64_t lo_mask = mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    Complex *data = amps.data();

#pragma omp parallel for if (amps.size() >= kParallelThreshold) schedule(static)
    for (std::int64_t k = 0; k < half; ++k) {
        const auto uk = static_cast<std::uint64_t>(k);
        const std::uint64_t i0 = ((uk & hi_mask) << 1) | (uk & lo_mask);
        if ((i0 & control_mask) != control_mask) {
            continue;
        }
        const std::uint64_t i1 = i0 | mask;
        const Complex a0 = data[i0];
        const Complex a1 = data[i1];
        data[i0] = m.m00 * a0 + m.m01 * a1;
        data[i1] = m.m10 * a0 + m.m11 * a1;
    }
}

void fold_low(std::span<const Complex> in, std::span<Complex> out, Complex w0,
              Complex w1) {
    assert(out.size() * 2 == in.size());
    const auto len = static_cast<std::int64_t>(out.size());
    const Complex *src = in.data();
    Complex *dst = out.data();

#pragma omp parallel for if (in.size() >= kParallelThreshold) schedule(static)
    for (std::int64_t h = 0; h < len; ++h) {
        dst[h] = w0 * src[2 * h] + w1 * src[2 * h + 1];
    }
}

void fold_high(std::span<const Complex> in, std::span<Complex> out,
               Complex w0, Complex w1) {
    assert(out.size() * 2 == in.size());
    const auto half = static_cast<std::int64_t>(out.size());
    const Complex *src = in.data();
    Complex *dst = out.data();

#pragma omp parallel for if (in.size() >= kParallelThreshold) schedule(static)
    for (std::int64_t r = 0; r < half; ++r) {
        dst[r] = w0 * src[r] + w1 * src[r + half];
    }
}

double norm_squared(std::span<const Complex> amps) {
    const std::size_t n = amps.size();
    const std::size_t blocks = n < kReductionBlocks ? 1 : kReductionBlocks;
    const std::size_t chunk = n / blocks;
    std::array<double, kReductionBlocks> partial{};
    const Complex *data = amps.data();

#pragma omp parallel for if (n >= kParallelThreshold) schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        const auto ub = static_cast<std::size_t>(b);
        const std::size_t end = (ub + 1 == blocks) ? n : (ub + 1) * chunk;
        double acc = 0.0;
        for (std::size_t i = ub * chunk; i < end; ++i) {
            acc += std::norm(data[i]);
        }
        partial[ub] = acc;
    }

    double total = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
        total += partial[b];
    }
    return total;
}

} // namespace qhopm::kernels::omp
