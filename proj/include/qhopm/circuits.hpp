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
 * Gate-list circuits: target-state and separable-state builders, layer
 * depth, adjoint / ancilla-controlled derivation and a line-oriented text
 * format.
 *
 * Text format: a header line `n=<qubits>` followed by one gate per line,
 * `KIND q0[,q1] [p0 [p1 [p2]]]`, e.g. `U3 2 0.1 0.2 0.3` or `CNOT 0,1`.
 * Blank lines and lines starting with `#` are ignored.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhopm/kernels.hpp"
#include "qhopm/tensor_core.hpp"

namespace qhopm {

enum class GateKind { RX, RZ, H, X, S, SDG, U3, CNOT, CZ };

[[nodiscard]] std::string to_string(GateKind kind);
[[nodiscard]] GateKind parse_gate_kind(const std::string &name);
[[nodiscard]] std::size_t arity(GateKind kind);
[[nodiscard]] std::size_t param_count(GateKind kind);

struct Gate {
    GateKind kind = GateKind::H;
    /// Wires the gate acts on; for CNOT / CZ the first is the control.
    std::vector<std::size_t> qubits;
    /// RX/RZ use params[0]; U3(theta, phi, lambda) uses all three.
    std::array<double, 3> params{};
    /// Extra control wires added by controlled().
    std::vector<std::size_t> controls;

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// 2x2 unitary applied to the gate's target wire (the last of `qubits`).
[[nodiscard]] kernels::Mat2 target_matrix(const Gate &gate);

class Circuit {
  public:
    explicit Circuit(std::size_t n);

    [[nodiscard]] std::size_t qubits() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

    /// Validates wire indices and parameters.
    Circuit &add(Gate gate);

    Circuit &rx(std::size_t q, double theta);
    Circuit &rz(std::size_t q, double phi);
    Circuit &h(std::size_t q);
    Circuit &x(std::size_t q);
    Circuit &s(std::size_t q);
    Circuit &sdg(std::size_t q);
    Circuit &u3(std::size_t q, double theta, double phi, double lambda);
    Circuit &cnot(std::size_t control, std::size_t target);
    Circuit &cz(std::size_t a, std::size_t b);

    /// Appends all gates of `other` (same width).
    Circuit &append(const Circuit &other);

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t n_;
    std::vector<Gate> gates_;
};

/// `first` followed by `second`.
[[nodiscard]] Circuit compose(const Circuit &first, const Circuit &second);

/// ASAP layer count. With `count_controls = false` the control wires added by
/// controlled() are ignored, i.e. controlled gates count as their base gate.
[[nodiscard]] std::size_t depth(const Circuit &c, bool count_controls = true);

[[nodiscard]] Circuit adjoint(const Circuit &c);

/// Prepends an ancilla as wire 0 and conditions every gate on it.
[[nodiscard]] Circuit controlled(const Circuit &c);

enum class TargetFamily { GHZ, W3, RING, RANDOM };

[[nodiscard]] std::string to_string(TargetFamily f);
[[nodiscard]] TargetFamily parse_family(const std::string &name);

struct TargetSpec {
    TargetFamily family = TargetFamily::GHZ;
    std::size_t n = 3;
    /// Required for RANDOM, ignored otherwise.
    std::optional<std::uint64_t> seed;

    /// Throws ContractViolation for an invalid spec.
    void validate() const;
    /// e.g. "GHZ9", "W3", "RANDOM4#42".
    [[nodiscard]] std::string label() const;
};

/// Depth at which RANDOM targets stop growing.
inline constexpr std::size_t kRandomTargetDepth = 10;

[[nodiscard]] Circuit build_target(const TargetSpec &spec);

/// RX(theta_q) then RZ(phi_q) on every wire.
[[nodiscard]] Circuit build_separable(std::span<const QubitAngles> angles);

/// As build_separable but wire `skip` carries no gates.
[[nodiscard]] Circuit build_separable_skip(std::span<const QubitAngles> angles,
                                           std::size_t skip);

[[nodiscard]] std::string to_text(const Circuit &c);
[[nodiscard]] Circuit from_text(const std::string &text);

} // namespace qhopm
