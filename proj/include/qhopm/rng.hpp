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
 * Seed derivation and random draws for reproducible experiments.
 *
 * Every independent unit of work (restart, experiment cell) gets its own
 * engine seeded from a hash of the values that identify it, so results do
 * not depend on which thread runs what.
 */

#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "qhopm/tensor_core.hpp"

namespace qhopm {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a over the bytes of `s`.
[[nodiscard]] constexpr std::uint64_t hash_string(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Order-sensitive combination of a master seed with identifying fields.
template <class... Parts>
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t master,
                                                  Parts... parts) noexcept {
    std::uint64_t h = mix64(master);
    ((h = mix64(h ^ static_cast<std::uint64_t>(parts))), ...);
    return h;
}

/// theta ~ U[0, pi), phi ~ U[0, 2pi) per qubit.
[[nodiscard]] std::vector<QubitAngles> random_angles(std::size_t n, Rng &rng);

/// Haar-random pure state (normalized complex Gaussian vector).
[[nodiscard]] StateTensor random_state(std::size_t n, Rng &rng);

/// Haar-random single-qubit vector.
[[nodiscard]] QubitVector random_qubit(Rng &rng);

} // namespace qhopm
