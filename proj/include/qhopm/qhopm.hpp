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
 * The measurement-driven power method: each sweep re-encodes every factor
 * from a one-qubit tomography of V_i^dagger U |0...0>, then measures the
 * overlap <0...0| V^dagger U |0...0> with one Hadamard test.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qhopm/circuits.hpp"
#include "qhopm/hopm_classical.hpp"
#include "qhopm/simulator.hpp"
#include "qhopm/tensor_core.hpp"

namespace qhopm {

/// Measurement settings per sweep on n qubits: four per factor plus two for
/// the overlap.
[[nodiscard]] constexpr std::uint64_t settings_per_sweep(std::size_t n) {
    return 4 * static_cast<std::uint64_t>(n) + 2;
}

/// Phase of the noise-free overlap from attenuated readouts x = q^d Re a,
/// y = q^(d+1) Im a.
[[nodiscard]] double noise_aware_phase(double x, double y, double q);

struct LambdaMeasurement {
    double lambda = 0.0;
    /// Phase of the noise-free overlap, see noise_aware_phase.
    double gamma = 0.0;
    /// Raw ancilla readouts.
    double x = 0.0;
    double y = 0.0;
    /// Noise depth used for this measurement.
    std::size_t depth = 0;
};

/// Hadamard test on W = V(angles)^dagger after `target`.
[[nodiscard]] LambdaMeasurement measure_lambda(const Circuit &target,
                                               std::span<const QubitAngles> angles,
                                               MeasurementBackend &backend);

struct IterationRecord {
    std::size_t k = 0;
    double lambda = 0.0;
    double gamma = 0.0;
    double e_g = 1.0;
    std::optional<double> e_g_mitigated;
    std::vector<QubitAngles> angles;
    std::uint64_t settings_used = 0;
    std::size_t depth = 0;
    double x = 0.0;
    double y = 0.0;
};

struct QhopmRun {
    TargetSpec target;
    Circuit circuit{1};
    std::vector<QubitAngles> init;
    SolverConfig cfg;
    MeasurementBackend backend;
    /// Noise rate used to mitigate each record; no mitigation when empty.
    std::optional<double> mitigation_p;
    /// Seeds the stream that re-draws a factor after a degenerate update.
    std::uint64_t reseed = 0;

    // Filled by run_qhopm.
    LambdaMeasurement initial;
    std::vector<IterationRecord> records;
    bool converged = false;
    std::size_t degenerate_resets = 0;
};

/// Builds a run for `target` with the circuit compiled from it.
[[nodiscard]] QhopmRun make_run(const TargetSpec &target,
                                std::vector<QubitAngles> init,
                                const SolverConfig &cfg,
                                MeasurementBackend backend);

/// Runs sweeps until |lambda_k - lambda_{k-1}| <= epsilon (after min_iter
/// sweeps) or max_iter. A degenerate tomography re-draws that factor's
/// angles and the sweep continues.
[[nodiscard]] QhopmRun run_qhopm(QhopmRun run);

/// Linear-interpolation quantile (numpy's default) of unsorted values.
[[nodiscard]] double quantile(std::vector<double> values, double prob);
[[nodiscard]] inline double median(std::vector<double> values) {
    return quantile(std::move(values), 0.5);
}

struct TraceSummary {
    double value = 0.0;
    double iqr = 0.0;
    /// Median over runs at each sweep.
    std::vector<double> per_sweep_median;
};

/// Per sweep k, the median over traces (shorter traces hold their final
/// value); then the median and interquartile range over the last `window`
/// sweep medians.
[[nodiscard]] TraceSummary
summarize_traces(const std::vector<std::vector<double>> &traces,
                 std::size_t window = 5);

struct RunSummary {
    double e_bar = 0.0;
    double iqr = 0.0;
    std::optional<double> e_bar_mitigated;
    std::optional<double> iqr_mitigated;
    std::size_t window = 0;
};

/// Summary over runs of the same target and noise setting.
[[nodiscard]] RunSummary summarize(std::span<const QhopmRun> runs,
                                   std::size_t window = 5);

} // namespace qhopm
