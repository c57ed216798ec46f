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

#include "qhopm/qhopm.hpp"

#include <algorithm>
#include <cmath>

#include "qhopm/errors.hpp"
#include "qhopm/noise_mitigation.hpp"
#include "qhopm/rng.hpp"
#include "qhopm/tomography.hpp"

namespace qhopm {

double noise_aware_phase(double x, double y, double q) {
    return std::atan2(y, q * x);
}

LambdaMeasurement measure_lambda(const Circuit &target,
                                 std::span<const QubitAngles> angles,
                                 MeasurementBackend &backend) {
    if (angles.size() != target.qubits()) {
        throw ContractViolation("measure_lambda: one angle pair per qubit");
    }
    const Circuit w = compose(target, adjoint(build_separable(angles)));
    LambdaMeasurement m;
    m.depth = backend.noise_depth(w);
    const AncillaExpectations e =
        hadamard_test(run(w), m.depth, std::nullopt, 0, backend);
    m.x = e.x;
    m.y = e.y;
    m.lambda = std::min(1.0, std::hypot(e.x, e.y));
    m.gamma = noise_aware_phase(e.x, e.y, 1.0 - backend.noise_rate());
    return m;
}

QhopmRun make_run(const TargetSpec &target, std::vector<QubitAngles> init,
                  const SolverConfig &cfg, MeasurementBackend backend) {
    QhopmRun r;
    r.target = target;
    r.circuit = build_target(target);
    r.init = std::move(init);
    r.cfg = cfg;
    r.backend = std::move(backend);
    return r;
}

QhopmRun run_qhopm(QhopmRun run) {
    run.cfg.validate();
    const std::size_t n = run.circuit.qubits();
    if (run.init.size() != n) {
        throw ContractViolation("run_qhopm: init must hold one factor per qubit");
    }
    run.records.clear();
    run.converged = false;
    run.degenerate_resets = 0;

    Rng reseed(run.reseed);
    std::vector<QubitAngles> angles = run.init;
    run.initial = measure_lambda(run.circuit, angles, run.backend);
    double lambda_prev = run.initial.lambda;
    const bool shifted = run.cfg.variant != Variant::Hopm;

    for (std::size_t k = 1; k <= run.cfg.max_iter; ++k) {
        const std::uint64_t settings_before = run.backend.settings_used();

        for (std::size_t i = 0; i < n; ++i) {
            const Circuit w = compose(
                run.circuit, adjoint(build_separable_skip(angles, i)));
            try {
                const TomographyResult t = recover_qubit(w, i, run.backend);
                if (shifted) {
                    const QubitVector next = shifted_combine(
                        angles_to_vector(t.angles), angles_to_vector(angles[i]),
                        lambda_prev, run.cfg.beta,
                        run.cfg.variant == Variant::Gsm, i);
                    angles[i] = vector_to_angles(next);
                } else {
                    angles[i] = t.angles;
                }
            } catch (const DegenerateUpdate &) {
                angles[i] = random_angles(1, reseed).front();
                ++run.degenerate_resets;
            }
        }

        const LambdaMeasurement m =
            measure_lambda(run.circuit, angles, run.backend);

        IterationRecord rec;
        rec.k = k;
        rec.lambda = m.lambda;
        rec.gamma = m.gamma;
        rec.e_g = e_g_from_lambda(m.lambda);
        rec.angles = angles;
        rec.settings_used = run.backend.settings_used() - settings_before;
        rec.depth = m.depth;
        rec.x = m.x;
        rec.y = m.y;
        if (run.mitigation_p) {
            const double gamma = noise_aware_phase(m.x, m.y, 1.0 - *run.mitigation_p);
            rec.e_g_mitigated =
                mitigate(rec.e_g, NoiseParams{*run.mitigation_p, m.depth}, gamma);
        }
        run.records.push_back(std::move(rec));

        const bool settled = std::abs(m.lambda - lambda_prev) <= run.cfg.epsilon;
        lambda_prev = m.lambda;
        if (settled && k >= run.cfg.min_iter) {
            run.converged = true;
            break;
        }
    }
    return run;
}

double quantile(std::vector<double> values, double prob) {
    if (values.empty()) {
        throw ContractViolation("quantile of an empty set");
    }
    std::sort(values.begin(), values.end());
    const double pos = prob * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

TraceSummary summarize_traces(const std::vector<std::vector<double>> &traces,
                              std::size_t window) {
    if (traces.empty() || window < 1) {
        throw ContractViolation("summarize: need at least one trace and window >= 1");
    }
    std::size_t length = 0;
    for (const auto &t : traces) {
        if (t.empty()) {
            throw ContractViolation("summarize: empty trace");
        }
        length = std::max(length, t.size());
    }

    TraceSummary out;
    out.per_sweep_median.reserve(length);
    std::vector<double> column(traces.size());
    for (std::size_t k = 0; k < length; ++k) {
        for (std::size_t r = 0; r < traces.size(); ++r) {
            const auto &t = traces[r];
            column[r] = k < t.size() ? t[k] : t.back();
        }
        out.per_sweep_median.push_back(median(column));
    }

    const std::size_t w = std::min(window, length);
    std::vector<double> tail(out.per_sweep_median.end() - static_cast<std::ptrdiff_t>(w),
                             out.per_sweep_median.end());
    out.value = median(tail);
    out.iqr = quantile(tail, 0.75) - quantile(tail, 0.25);
    return out;
}

RunSummary summarize(std::span<const QhopmRun> runs, std::size_t window) {
    if (runs.empty()) {
        throw ContractViolation("summarize: no runs");
    }
    std::vector<std::vector<double>> raw;
    std::vector<std::vector<double>> mitigated;
    bool all_mitigated = true;
    for (const QhopmRun &r : runs) {
        std::vector<double> e;
        std::vector<double> em;
        for (const IterationRecord &rec : r.records) {
            e.push_back(rec.e_g);
            if (rec.e_g_mitigated) {
                em.push_back(*rec.e_g_mitigated);
            } else {
                all_mitigated = false;
            }
        }
        raw.push_back(std::move(e));
        mitigated.push_back(std::move(em));
    }

    RunSummary out;
    const TraceSummary s = summarize_traces(raw, window);
    out.e_bar = s.value;
    out.iqr = s.iqr;
    out.window = std::min(window, s.per_sweep_median.size());
    if (all_mitigated) {
        const TraceSummary sm = summarize_traces(mitigated, window);
        out.e_bar_mitigated = sm.value;
        out.iqr_mitigated = sm.iqr;
    }
    return out;
}

} // namespace qhopm
