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

#include "qhopm/hopm_classical.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>

#include "qhopm/errors.hpp"
#include "qhopm/rng.hpp"

namespace qhopm {

std::string to_string(Variant v) {
    switch (v) {
    case Variant::Hopm:
        return "hopm";
    case Variant::Gsm:
        return "gsm";
    case Variant::Shopm:
        return "shopm";
    }
    return "hopm";
}

Variant parse_variant(const std::string &name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "hopm") {
        return Variant::Hopm;
    }
    if (lower == "gsm") {
        return Variant::Gsm;
    }
    if (lower == "shopm") {
        return Variant::Shopm;
    }
    throw ContractViolation("unknown variant '" + name + "'");
}

void SolverConfig::validate() const {
    if (!(epsilon > 0.0)) {
        throw ContractViolation("epsilon must be > 0");
    }
    if (max_iter < 1) {
        throw ContractViolation("max_iter must be >= 1");
    }
    if (variant != Variant::Hopm && !(beta > 0.0)) {
        throw ContractViolation("shifted variants need beta > 0");
    }
}

QubitVector shifted_combine(const QubitVector &updated,
                            const QubitVector &previous, double lambda_prev,
                            double beta, bool use_lambda, std::size_t mode) {
    const double scale = use_lambda ? lambda_prev : 1.0;
    return normalize(QubitVector{scale * updated.c0 + beta * previous.c0,
                                 scale * updated.c1 + beta * previous.c1},
                     mode);
}

namespace {

QubitVector canonical_update(const QubitVector &u, std::size_t mode) {
    return angles_to_vector(vector_to_angles(normalize(u, mode)));
}

} // namespace

QubitVector shifted_hopm_step(const StateTensor &tensor,
                              std::span<const QubitAngles> factors,
                              std::size_t i, double lambda_prev, double beta,
                              bool use_lambda) {
    if (!(beta > 0.0)) {
        throw ContractViolation("shifted_hopm_step: beta must be > 0");
    }
    const auto vecs = to_vectors(factors);
    const QubitVector u = n_mode_product_skip(tensor, vecs, i);
    return shifted_combine(canonical_update(u, i), vecs[i], lambda_prev, beta,
                           use_lambda, i);
}

SolverResult hopm(const StateTensor &tensor, std::span<const QubitAngles> init,
                  const SolverConfig &cfg) {
    cfg.validate();
    if (init.size() != tensor.qubits()) {
        throw ContractViolation("hopm: init must hold one factor per qubit");
    }
    if (!tensor.is_normalized(1e-9)) {
        throw ContractViolation("hopm: tensor is not normalized");
    }

    const std::size_t n = tensor.qubits();
    SolverResult result;
    result.factors.assign(init.begin(), init.end());
    std::vector<QubitVector> vecs = to_vectors(result.factors);

    double lambda_prev = std::abs(full_contraction(tensor, vecs));
    result.initial_lambda = lambda_prev;
    result.lambda = lambda_prev;

    for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const QubitVector u = n_mode_product_skip(tensor, vecs, i);
            QubitVector next = canonical_update(u, i);
            if (cfg.variant != Variant::Hopm) {
                next = shifted_combine(next, vecs[i], lambda_prev, cfg.beta,
                                       cfg.variant == Variant::Gsm, i);
            }
            result.factors[i] = vector_to_angles(next);
            vecs[i] = angles_to_vector(result.factors[i]);
        }

        const double lambda = std::min(1.0, std::abs(full_contraction(tensor, vecs)));
        result.trace.push_back(lambda);
        result.lambda = lambda;
        result.iterations = k;
        const bool settled = std::abs(lambda - lambda_prev) <= cfg.epsilon;
        lambda_prev = lambda;
        if (settled && k >= cfg.min_iter) {
            result.converged = true;
            break;
        }
    }
    result.e_g = e_g_from_lambda(result.lambda);
    return result;
}

double schmidt_lambda_bipartite(const StateTensor &tensor) {
    if (tensor.qubits() != 2) {
        throw ContractViolation("schmidt_lambda_bipartite needs n = 2");
    }
    // A = [[a, b], [c, d]] with rows indexed by the first qubit.
    const ComplexAmp a = tensor[0];
    const ComplexAmp b = tensor[1];
    const ComplexAmp c = tensor[2];
    const ComplexAmp d = tensor[3];
    // Eigenvalues of A^dagger A: (tr +- sqrt(tr^2 - 4 |det A|^2)) / 2.
    const double tr = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    const double det_sq = std::norm(a * d - b * c);
    const double disc = std::max(0.0, tr * tr - 4.0 * det_sq);
    return std::sqrt(0.5 * (tr + std::sqrt(disc)));
}

MultistartResult multistart_lambda(const StateTensor &tensor,
                                   std::size_t restarts,
                                   const SolverConfig &cfg,
                                   std::uint64_t seed) {
    if (restarts < 1) {
        throw ContractViolation("multistart_lambda: restarts must be >= 1");
    }
    cfg.validate();

    MultistartResult out;
    out.runs.resize(restarts);
    std::vector<std::exception_ptr> errors(restarts);
    const auto count = static_cast<std::int64_t>(restarts);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < count; ++r) {
        const auto idx = static_cast<std::size_t>(r);
        try {
            Rng rng(derive_seed(seed, idx));
            const auto init = random_angles(tensor.qubits(), rng);
            out.runs[idx] = hopm(tensor, init, cfg);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    for (std::size_t r = 1; r < restarts; ++r) {
        if (out.runs[r].lambda > out.runs[out.best_index].lambda + 1e-12) {
            out.best_index = r;
        }
    }
    out.best = out.runs[out.best_index];
    return out;
}

} // namespace qhopm
