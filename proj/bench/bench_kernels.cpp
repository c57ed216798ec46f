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
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qhopm/circuits.hpp"
#include "qhopm/kernels.hpp"
#include "qhopm/rng.hpp"
#include "qhopm/simulator.hpp"

namespace {

using qhopm::kernels::Complex;
using qhopm::kernels::Mat2;

std::vector<Complex> amplitudes(std::size_t qubits) {
    qhopm::Rng rng(qubits);
    std::normal_distribution<double> g;
    std::vector<Complex> v(std::size_t{1} << qubits);
    for (auto &a : v) a = {g(rng), g(rng)};
    return v;
}

const double kR = 1.0 / std::numbers::sqrt2;
const Mat2 kHadamard{kR, kR, kR, -kR};

template <auto Apply> void BM_apply_1q(benchmark::State &state) {
    const auto qubits = static_cast<std::size_t>(state.range(0));
    auto amps = amplitudes(qubits);
    unsigned t = 0;
    for (auto _ : state) {
        Apply(amps, t, kHadamard, 0);
        t = (t + 1) % static_cast<unsigned>(qubits);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(amps.size() * sizeof(Complex)));
}

template <auto Fold> void BM_fold(benchmark::State &state) {
    const auto qubits = static_cast<std::size_t>(state.range(0));
    const auto in = amplitudes(qubits);
    std::vector<Complex> out(in.size() / 2);
    for (auto _ : state) {
        Fold(in, out, Complex{0.6, 0.1}, Complex{-0.2, 0.7});
        benchmark::DoNotOptimize(out.data());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(in.size() * sizeof(Complex)));
}

template <auto Norm> void BM_norm(benchmark::State &state) {
    const auto amps = amplitudes(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Norm(amps));
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(amps.size() * sizeof(Complex)));
}

void BM_ghz_circuit(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const qhopm::Circuit c = qhopm::build_target({qhopm::TargetFamily::GHZ, n, {}});
    for (auto _ : state) {
        auto s = qhopm::run(c);
        benchmark::DoNotOptimize(s.amps().data());
    }
}

} // namespace

BENCHMARK(BM_apply_1q<qhopm::kernels::serial::apply_1q>)->Name("apply_1q/serial")->DenseRange(10, 22, 4);
BENCHMARK(BM_apply_1q<qhopm::kernels::omp::apply_1q>)->Name("apply_1q/omp")->DenseRange(10, 22, 4);
BENCHMARK(BM_fold<qhopm::kernels::serial::fold_low>)->Name("fold_low/serial")->DenseRange(10, 22, 4);
BENCHMARK(BM_fold<qhopm::kernels::omp::fold_low>)->Name("fold_low/omp")->DenseRange(10, 22, 4);
BENCHMARK(BM_fold<qhopm::kernels::serial::fold_high>)->Name("fold_high/serial")->DenseRange(10, 22, 4);
BENCHMARK(BM_fold<qhopm::kernels::omp::fold_high>)->Name("fold_high/omp")->DenseRange(10, 22, 4);
BENCHMARK(BM_norm<qhopm::kernels::serial::norm_squared>)->Name("norm_squared/serial")->DenseRange(10, 22, 4);
BENCHMARK(BM_norm<qhopm::kernels::omp::norm_squared>)->Name("norm_squared/omp")->DenseRange(10, 22, 4);
BENCHMARK(BM_ghz_circuit)->Name("run/ghz")->DenseRange(8, 20, 4);

BENCHMARK_MAIN();
