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

#include "qhopm/tomography.hpp"

#include <algorithm>
#include <cmath>

#include "qhopm/errors.hpp"

namespace qhopm {

TomographyResult recover_qubit(const StateTensor &w_state, std::size_t d,
                               std::size_t wire, MeasurementBackend &backend) {
    if (wire >= w_state.qubits()) {
        throw ContractViolation("recover_qubit: wire out of range");
    }
    const AncillaExpectations e0 = hadamard_test(w_state, d, wire, 0, backend);
    const AncillaExpectations e1 = hadamard_test(w_state, d, wire, 1, backend);

    TomographyResult out;
    out.raw = QubitVector{{e0.x, e0.y}, {e1.x, e1.y}};
    const double nsq = std::norm(out.raw.c0) + std::norm(out.raw.c1);
    if (!(nsq >= kDegenerateNormSq)) {
        throw DegenerateUpdate(wire);
    }
    out.raw_norm = std::sqrt(nsq);
    const QubitVector v = normalize(out.raw, wire);
    out.c0 = v.c0;
    out.c1 = v.c1;
    out.angles = vector_to_angles(v);
    return out;
}

TomographyResult recover_qubit(const Circuit &w, std::size_t wire,
                               MeasurementBackend &backend) {
    return recover_qubit(run(w), backend.noise_depth(w), wire, backend);
}

BlochReadout readout_of(const QubitVector &v) {
    const ComplexAmp cross = std::conj(v.c0) * v.c1;
    return {1.0 - 2.0 * std::norm(v.c0), 2.0 * cross.real(), 2.0 * cross.imag()};
}

QubitAngles solve_angles_via_expectations(double z, double x, double y) {
    const double theta = std::acos(std::clamp(-z, -1.0, 1.0));
    if (std::sin(theta) < kPoleSin) {
        return QubitAngles(theta, 0.0);
    }
    return QubitAngles(theta, std::atan2(x, -y));
}

} // namespace qhopm
