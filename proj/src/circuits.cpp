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

#include "qhopm/circuits.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "qhopm/errors.hpp"
#include "qhopm/rng.hpp"

namespace qhopm {

namespace {

using kernels::Complex;
using kernels::Mat2;

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return s;
}

} // namespace

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RZ:
        return "RZ";
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::S:
        return "S";
    case GateKind::SDG:
        return "SDG";
    case GateKind::U3:
        return "U3";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::CZ:
        return "CZ";
    }
    return "?";
}

GateKind parse_gate_kind(const std::string &name) {
    static constexpr std::array kinds{GateKind::RX, GateKind::RZ, GateKind::H,
                                      GateKind::X,  GateKind::S,  GateKind::SDG,
                                      GateKind::U3, GateKind::CNOT, GateKind::CZ};
    const std::string key = upper(name);
    for (GateKind k : kinds) {
        if (to_string(k) == key) {
            return k;
        }
    }
    throw ContractViolation("unknown gate '" + name + "'");
}

std::size_t arity(GateKind kind) {
    return (kind == GateKind::CNOT || kind == GateKind::CZ) ? 2 : 1;
}

std::size_t param_count(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
    case GateKind::RZ:
        return 1;
    case GateKind::U3:
        return 3;
    default:
        return 0;
    }
}

Mat2 target_matrix(const Gate &gate) {
    const Complex i{0.0, 1.0};
    const auto &p = gate.params;
    switch (gate.kind) {
    case GateKind::RX: {
        const double c = std::cos(0.5 * p[0]);
        const double s = std::sin(0.5 * p[0]);
        return {c, -i * s, -i * s, c};
    }
    case GateKind::RZ:
        return {std::polar(1.0, -0.5 * p[0]), 0.0, 0.0,
                std::polar(1.0, 0.5 * p[0])};
    case GateKind::H: {
        const double r = std::numbers::sqrt2 / 2.0;
        return {r, r, r, -r};
    }
    case GateKind::X:
    case GateKind::CNOT:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::S:
        return {1.0, 0.0, 0.0, i};
    case GateKind::SDG:
        return {1.0, 0.0, 0.0, -i};
    case GateKind::CZ:
        return {1.0, 0.0, 0.0, -1.0};
    case GateKind::U3: {
        const double c = std::cos(0.5 * p[0]);
        const double s = std::sin(0.5 * p[0]);
        return {c, -std::polar(s, p[2]), std::polar(s, p[1]),
                std::polar(c, p[1] + p[2])};
    }
    }
    throw ContractViolation("target_matrix: unknown gate");
}

Circuit::Circuit(std::size_t n) : n_(n) {
    if (n == 0) {
        throw ContractViolation("Circuit: need at least one qubit");
    }
}

Circuit &Circuit::add(Gate gate) {
    if (gate.qubits.size() != arity(gate.kind)) {
        throw ContractViolation(to_string(gate.kind) + ": wrong wire count");
    }
    std::vector<std::size_t> wires = gate.qubits;
    wires.insert(wires.end(), gate.controls.begin(), gate.controls.end());
    for (std::size_t w : wires) {
        if (w >= n_) {
            throw ContractViolation(to_string(gate.kind) + ": wire " +
                                    std::to_string(w) + " out of range");
        }
    }
    std::sort(wires.begin(), wires.end());
    if (std::adjacent_find(wires.begin(), wires.end()) != wires.end()) {
        throw ContractViolation(to_string(gate.kind) + ": repeated wire");
    }
    for (double v : gate.params) {
        if (!std::isfinite(v)) {
            throw ContractViolation(to_string(gate.kind) +
                                    ": non-finite parameter");
        }
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::rx(std::size_t q, double theta) {
    return add({GateKind::RX, {q}, {theta, 0.0, 0.0}, {}});
}
Circuit &Circuit::rz(std::size_t q, double phi) {
    return add({GateKind::RZ, {q}, {phi, 0.0, 0.0}, {}});
}
Circuit &Circuit::h(std::size_t q) { return add({GateKind::H, {q}, {}, {}}); }
Circuit &Circuit::x(std::size_t q) { return add({GateKind::X, {q}, {}, {}}); }
Circuit &Circuit::s(std::size_t q) { return add({GateKind::S, {q}, {}, {}}); }
Circuit &Circuit::sdg(std::size_t q) {
    return add({GateKind::SDG, {q}, {}, {}});
}
Circuit &Circuit::u3(std::size_t q, double theta, double phi, double lambda) {
    return add({GateKind::U3, {q}, {theta, phi, lambda}, {}});
}
Circuit &Circuit::cnot(std::size_t control, std::size_t target) {
    return add({GateKind::CNOT, {control, target}, {}, {}});
}
Circuit &Circuit::cz(std::size_t a, std::size_t b) {
    return add({GateKind::CZ, {a, b}, {}, {}});
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.qubits() != n_) {
        throw ContractViolation("append: width mismatch");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit compose(const Circuit &first, const Circuit &second) {
    Circuit out = first;
    out.append(second);
    return out;
}

std::size_t depth(const Circuit &c, bool count_controls) {
    std::vector<std::size_t> level(c.qubits(), 0);
    std::size_t deepest = 0;
    for (const Gate &g : c.gates()) {
        std::size_t layer = 0;
        auto visit = [&](auto &&fn) {
            for (std::size_t w : g.qubits) {
                fn(w);
            }
            if (count_controls) {
                for (std::size_t w : g.controls) {
                    fn(w);
                }
            }
        };
        visit([&](std::size_t w) { layer = std::max(layer, level[w]); });
        ++layer;
        visit([&](std::size_t w) { level[w] = layer; });
        deepest = std::max(deepest, layer);
    }
    return deepest;
}

Circuit adjoint(const Circuit &c) {
    Circuit out(c.qubits());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
        case GateKind::RX:
        case GateKind::RZ:
            g.params[0] = -g.params[0];
            break;
        case GateKind::S:
            g.kind = GateKind::SDG;
            break;
        case GateKind::SDG:
            g.kind = GateKind::S;
            break;
        case GateKind::U3:
            g.params = {-g.params[0], -g.params[2], -g.params[1]};
            break;
        default:
            break;
        }
        out.add(std::move(g));
    }
    return out;
}

Circuit controlled(const Circuit &c) {
    Circuit out(c.qubits() + 1);
    for (Gate g : c.gates()) {
        for (auto &w : g.qubits) {
            ++w;
        }
        for (auto &w : g.controls) {
            ++w;
        }
        g.controls.insert(g.controls.begin(), 0);
        out.add(std::move(g));
    }
    return out;
}

std::string to_string(TargetFamily f) {
    switch (f) {
    case TargetFamily::GHZ:
        return "GHZ";
    case TargetFamily::W3:
        return "W";
    case TargetFamily::RING:
        return "RING";
    case TargetFamily::RANDOM:
        return "RANDOM";
    }
    return "?";
}

TargetFamily parse_family(const std::string &name) {
    const std::string key = upper(name);
    if (key == "GHZ") {
        return TargetFamily::GHZ;
    }
    if (key == "W" || key == "W3") {
        return TargetFamily::W3;
    }
    if (key == "RING") {
        return TargetFamily::RING;
    }
    if (key == "RANDOM") {
        return TargetFamily::RANDOM;
    }
    throw ContractViolation("unknown target family '" + name + "'");
}

void TargetSpec::validate() const {
    switch (family) {
    case TargetFamily::GHZ:
        if (n < 2) {
            throw ContractViolation("GHZ needs n >= 2");
        }
        break;
    case TargetFamily::W3:
        if (n != 3) {
            throw ContractViolation("W3 is defined for n = 3 only");
        }
        break;
    case TargetFamily::RING:
        if (n < 3) {
            throw ContractViolation("RING needs n >= 3");
        }
        break;
    case TargetFamily::RANDOM:
        if (n < 1) {
            throw ContractViolation("RANDOM needs n >= 1");
        }
        if (!seed) {
            throw ContractViolation("RANDOM targets require a seed");
        }
        break;
    }
    if (n > 24) {
        throw ContractViolation("target too wide for dense simulation");
    }
}

std::string TargetSpec::label() const {
    std::string out = to_string(family) + std::to_string(n);
    if (family == TargetFamily::RANDOM && seed) {
        out += "#" + std::to_string(*seed);
    }
    return out;
}

namespace {

Circuit build_w3() {
    // q0 -> sqrt(1/3)|0> + sqrt(2/3)|1>; a CNOT-sandwiched Ry(pi/4) pair is a
    // controlled Ry(pi/2) that splits the |1> branch over q0 and q1; the last
    // three gates set q2 to the parity complement of q0, q1.
    Circuit c(3);
    c.u3(0, 2.0 * std::acos(1.0 / std::sqrt(3.0)), 0.0, 0.0);
    c.u3(1, std::numbers::pi / 4.0, 0.0, 0.0);
    c.cnot(0, 1);
    c.u3(1, -std::numbers::pi / 4.0, 0.0, 0.0);
    c.cnot(0, 1);
    c.cnot(1, 0);
    c.x(2);
    c.cnot(0, 2);
    c.cnot(1, 2);
    return c;
}

Circuit build_random(std::size_t n, std::uint64_t seed) {
    Rng rng(derive_seed(seed, hash_string("random-target"), n));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_int_distribution<std::size_t> wire(0, n - 1);
    std::bernoulli_distribution pick_cnot(0.5);

    Circuit c(n);
    while (depth(c) < kRandomTargetDepth) {
        if (n >= 2 && pick_cnot(rng)) {
            const std::size_t a = wire(rng);
            std::size_t b = wire(rng);
            while (b == a) {
                b = wire(rng);
            }
            c.cnot(a, b);
        } else {
            const std::size_t q = wire(rng);
            const double theta = angle(rng);
            const double phi = angle(rng);
            c.u3(q, theta, phi, angle(rng));
        }
    }
    return c;
}

} // namespace

Circuit build_target(const TargetSpec &spec) {
    spec.validate();
    switch (spec.family) {
    case TargetFamily::GHZ: {
        Circuit c(spec.n);
        c.h(0);
        for (std::size_t q = 0; q + 1 < spec.n; ++q) {
            c.cnot(q, q + 1);
        }
        return c;
    }
    case TargetFamily::W3:
        return build_w3();
    case TargetFamily::RING: {
        Circuit c(spec.n);
        for (std::size_t q = 0; q < spec.n; ++q) {
            c.h(q);
        }
        for (std::size_t q = 0; q < spec.n; ++q) {
            c.cz(q, (q + 1) % spec.n);
        }
        return c;
    }
    case TargetFamily::RANDOM:
        return build_random(spec.n, *spec.seed);
    }
    throw ContractViolation("build_target: unknown family");
}

Circuit build_separable(std::span<const QubitAngles> angles) {
    Circuit c(angles.size());
    for (std::size_t q = 0; q < angles.size(); ++q) {
        c.rx(q, angles[q].theta());
        c.rz(q, angles[q].phi());
    }
    return c;
}

Circuit build_separable_skip(std::span<const QubitAngles> angles,
                             std::size_t skip) {
    if (skip >= angles.size()) {
        throw ContractViolation("build_separable_skip: index out of range");
    }
    Circuit c(angles.size());
    for (std::size_t q = 0; q < angles.size(); ++q) {
        if (q == skip) {
            continue;
        }
        c.rx(q, angles[q].theta());
        c.rz(q, angles[q].phi());
    }
    return c;
}

std::string to_text(const Circuit &c) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "n=" << c.qubits() << '\n';
    for (const Gate &g : c.gates()) {
        if (!g.controls.empty()) {
            throw ContractViolation("to_text: controlled gates are not serializable");
        }
        os << to_string(g.kind) << ' ' << g.qubits[0];
        if (g.qubits.size() == 2) {
            os << ',' << g.qubits[1];
        }
        for (std::size_t p = 0; p < param_count(g.kind); ++p) {
            os << ' ' << g.params[p];
        }
        os << '\n';
    }
    return os.str();
}

Circuit from_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    auto fail = [&](const std::string &why) {
        throw ContractViolation("circuit text line " + std::to_string(line_no) +
                                ": " + why);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        if (!circuit) {
            if (line.compare(first, 2, "n=") != 0) {
                fail("expected header 'n=<qubits>'");
            }
            try {
                circuit.emplace(std::stoul(line.substr(first + 2)));
            } catch (const std::logic_error &) {
                fail("bad qubit count");
            }
            continue;
        }

        std::istringstream ls(line);
        std::string kind_name;
        std::string wires;
        ls >> kind_name >> wires;
        Gate g;
        g.kind = parse_gate_kind(kind_name);
        std::istringstream ws(wires);
        std::string item;
        while (std::getline(ws, item, ',')) {
            try {
                g.qubits.push_back(std::stoul(item));
            } catch (const std::logic_error &) {
                fail("bad wire index '" + item + "'");
            }
        }
        for (std::size_t p = 0; p < param_count(g.kind); ++p) {
            if (!(ls >> g.params[p])) {
                fail("missing parameter");
            }
        }
        std::string extra;
        if (ls >> extra) {
            fail("unexpected token '" + extra + "'");
        }
        circuit->add(std::move(g));
    }
    if (!circuit) {
        throw ContractViolation("circuit text: missing header");
    }
    return *circuit;
}

} // namespace qhopm
