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
 * Experiment grids behind the command-line tool: configuration, per-cell
 * seeding, parallel execution, CSV rows and JSON summaries.
 *
 * A cell is one (target, noise rate, init) run. Its random streams are
 * derived from the master seed and the values that identify the cell, so
 * output is identical for any number of worker threads.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qhopm/circuits.hpp"
#include "qhopm/hopm_classical.hpp"
#include "qhopm/qhopm.hpp"
#include "qhopm/simulator.hpp"

namespace qhopm {

struct ExperimentConfig {
    std::vector<TargetSpec> targets;
    std::size_t inits = 10;
    std::uint64_t seed = 1;
    SolverConfig solver{0.003, 200, 1, Variant::Hopm, 0.0};
    ShotMode mode = ShotMode::Shots;
    std::uint64_t shots = 100000;
    std::vector<double> noise_p{0.0};
    bool tomography_noise = true;
    std::optional<std::size_t> depth;
    bool mitigate = false;
    /// Rate used for mitigation; each cell's own rate when empty.
    std::optional<double> mitigation_p;
    /// Restarts of the classical oracle added to the JSON summary (0 = off).
    std::size_t oracle_restarts = 0;
    std::string out_csv;
    std::string out_json;
    /// Worker threads; 0 lets OpenMP decide.
    int jobs = 0;

    /// Throws ConfigError.
    void validate() const;

    /// Strict: unknown keys are rejected.
    [[nodiscard]] static ExperimentConfig from_json(const nlohmann::json &j);
    [[nodiscard]] static ExperimentConfig load(const std::string &path);
    [[nodiscard]] nlohmann::json to_json() const;
};

/// "GHZ:9", "W:3", "RING:6", "RANDOM:4:42".
[[nodiscard]] TargetSpec parse_target(const std::string &text);
[[nodiscard]] std::string format_target(const TargetSpec &t);

struct Cell {
    std::size_t run_id = 0;
    TargetSpec target;
    double p = 0.0;
    std::size_t init_id = 0;
};

/// Cells in output order: target, then noise rate, then init.
[[nodiscard]] std::vector<Cell> enumerate_cells(const ExperimentConfig &cfg);

/// Initial angles of a cell; shared by every noise rate of the same target.
[[nodiscard]] std::vector<QubitAngles> cell_init(const ExperimentConfig &cfg,
                                                 const TargetSpec &target,
                                                 std::size_t init_id);

[[nodiscard]] std::uint64_t cell_stream_seed(const ExperimentConfig &cfg,
                                             const Cell &cell);

struct ExperimentResult {
    std::vector<Cell> cells;
    std::vector<QhopmRun> runs;
};

[[nodiscard]] ExperimentResult run_experiment(const ExperimentConfig &cfg);

inline constexpr const char *kRunCsvHeader =
    "run_id,family,n,seed,init_id,k,lambda,gamma,e_g,e_g_mitigated,p,d,shots,"
    "settings_used";

void write_run_csv(std::ostream &os, const ExperimentConfig &cfg,
                   const ExperimentResult &result);

[[nodiscard]] nlohmann::json summary_json(const ExperimentConfig &cfg,
                                          const ExperimentResult &result);

struct OracleRow {
    TargetSpec target;
    std::size_t init_id = 0;
    SolverResult result;
    double best_e_g = 0.0;
    std::optional<double> schmidt_e_g;
};

/// Classical HOPM from the same inits the quantum runs use.
[[nodiscard]] std::vector<OracleRow> run_oracle(const ExperimentConfig &cfg);

inline constexpr const char *kOracleCsvHeader =
    "family,n,seed,init_id,lambda,e_g,iterations,converged,best_e_g,schmidt_e_g";

void write_oracle_csv(std::ostream &os, const std::vector<OracleRow> &rows);

struct NoiseEstimate {
    TargetSpec reference;
    double injected_p = 0.0;
    double e_bar_reference = 0.0;
    std::size_t d = 0;
    double p_hat = 0.0;
};

/// Runs the configured backend on a single GHZ reference (known E_G = 1/2)
/// and inverts the mitigation formula for p. Throws ConfigError for a
/// non-GHZ reference and NegativeRate when the run lands below 1/2.
[[nodiscard]] NoiseEstimate estimate_noise(const ExperimentConfig &cfg);

[[nodiscard]] nlohmann::json to_json(const NoiseEstimate &e);

/// p_hat from a file written by estimate-noise.
[[nodiscard]] double read_noise_estimate(const std::string &path);

/// %.17g
[[nodiscard]] std::string format_double(double v);

} // namespace qhopm
