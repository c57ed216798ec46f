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
 * Classical higher-order power method on dense qubit tensors, the shifted
 * (GSM / SHOPM) variants, and brute-force references used as ground truth.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qhopm/tensor_core.hpp"

namespace qhopm {

enum class Variant {
    Hopm,
    Gsm,   ///< lambda * update + beta * previous factor
    Shopm, ///< update + beta * previous factor
};

[[nodiscard]] std::string to_string(Variant v);
[[nodiscard]] Variant parse_variant(const std::string &name);

struct SolverConfig {
    double epsilon = 1e-10;
    std::size_t max_iter = 200;
    /// Sweeps to run before the stopping rule may fire.
    std::size_t min_iter = 1;
    Variant variant = Variant::Hopm;
    double beta = 0.0;

    /// Throws ContractViolation on an invalid combination.
    void validate() const;
};

struct SolverResult {
    double lambda = 0.0;
    double e_g = 1.0;
    std::vector<QubitAngles> factors;
    /// lambda after the initial factors, before any sweep.
    double initial_lambda = 0.0;
    /// lambda after sweep k is trace[k - 1].
    std::vector<double> trace;
    bool converged = false;
    std::size_t iterations = 0;
};

[[nodiscard]] constexpr double e_g_from_lambda(double lambda) noexcept {
    return 1.0 - lambda * lambda;
}

/// Gauss-Seidel sweeps: mode i is updated from modes j < i of the current
/// sweep and j > i of the previous one. Stops once |lambda_k - lambda_{k-1}|
/// <= epsilon (after min_iter sweeps) or after max_iter sweeps.
[[nodiscard]] SolverResult hopm(const StateTensor &tensor,
                                std::span<const QubitAngles> init,
                                const SolverConfig &cfg);

/// normalize((use_lambda ? lambda_prev : 1) * updated + beta * previous).
///
/// `updated` is the normalized plain-HOPM factor in the canonical phase of
/// angles_to_vector, i.e. the vector a one-qubit tomography would re-encode;
/// `previous` is the factor before the update, in the same convention.
[[nodiscard]] QubitVector shifted_combine(const QubitVector &updated,
                                          const QubitVector &previous,
                                          double lambda_prev, double beta,
                                          bool use_lambda, std::size_t mode);

/// One shifted update of mode i from the current factors.
[[nodiscard]] QubitVector shifted_hopm_step(const StateTensor &tensor,
                                            std::span<const QubitAngles> factors,
                                            std::size_t i, double lambda_prev,
                                            double beta, bool use_lambda);

/// Largest singular value of the 2x2 amplitude matrix of a two-qubit state.
[[nodiscard]] double schmidt_lambda_bipartite(const StateTensor &tensor);

struct MultistartResult {
    SolverResult best;
    std::size_t best_index = 0;
    std::vector<SolverResult> runs;
};

/// Runs hopm from `restarts` random inits (restart r seeded by
/// derive_seed(seed, r)) and keeps the largest lambda; ties within 1e-12 go
/// to the earliest restart. Restarts run in parallel.
[[nodiscard]] MultistartResult multistart_lambda(const StateTensor &tensor,
                                                 std::size_t restarts,
                                                 const SolverConfig &cfg,
                                                 std::uint64_t seed);

} // namespace qhopm
