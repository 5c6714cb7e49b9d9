// Copyright 2026 The acsim Authors
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

#include "acsim/gates.hpp"

#include <cmath>

#include "acsim/errors.hpp"

namespace acsim {

Unitary2 u_phase_matrix(double gamma) {
    if (!std::isfinite(gamma)) {
        throw InvalidParameter("phase angle must be finite");
    }
    Unitary2 u;
    u.at(0, 0) = std::polar(1.0, -gamma / 2.0);
    u.at(1, 1) = std::polar(1.0, +gamma / 2.0);
    return u;
}

Unitary2 u_swap_matrix(double theta) {
    if (!std::isfinite(theta)) {
        throw InvalidParameter("swap angle must be finite");
    }
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    Unitary2 u;
    u.at(0, 0) = c;
    u.at(0, 1) = -s;
    u.at(1, 0) = s;
    u.at(1, 1) = c;
    return u;
}

Unitary4 b_matrix(double gamma) {
    if (!std::isfinite(gamma)) {
        throw InvalidParameter("controlled phase angle must be finite");
    }
    const cplx phase = std::polar(1.0, gamma);
    Unitary4 u;
    u.at(0, 0) = phase;
    u.at(1, 1) = 1.0;
    u.at(2, 2) = 1.0;
    u.at(3, 3) = phase;
    return u;
}

double transmission(double theta) {
    if (!std::isfinite(theta)) {
        throw InvalidParameter("swap angle must be finite");
    }
    return std::cos(theta / 2.0);
}

std::variant<Unitary2, Unitary4> gate_matrix(const Gate& gate) {
    return std::visit(
        [](const auto& g) -> std::variant<Unitary2, Unitary4> {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, OneQubitPhase>) {
                return u_phase_matrix(g.gamma);
            } else if constexpr (std::is_same_v<T, PartialSwap>) {
                return u_swap_matrix(g.theta);
            } else {
                return b_matrix(g.gamma);
            }
        },
        gate);
}

void validate_gate(const Gate& gate, int width) {
    std::visit(
        [width](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, ControlledPhase>) {
                if (g.control < 0 || g.control >= width || g.target < 0 || g.target >= width) {
                    throw IndexOutOfRange("controlled phase qubit index outside circuit width");
                }
                if (g.control == g.target) {
                    throw InvalidParameter("controlled phase needs two distinct qubits");
                }
                if (!std::isfinite(g.gamma)) {
                    throw InvalidParameter("gate angle must be finite");
                }
            } else {
                if (g.target < 0 || g.target >= width) {
                    throw IndexOutOfRange("gate target outside circuit width");
                }
                if constexpr (std::is_same_v<T, OneQubitPhase>) {
                    if (!std::isfinite(g.gamma)) {
                        throw InvalidParameter("gate angle must be finite");
                    }
                } else {
                    if (!std::isfinite(g.theta)) {
                        throw InvalidParameter("gate angle must be finite");
                    }
                }
            }
        },
        gate);
}

void validate_circuit(const Circuit& circuit) {
    if (circuit.width < 1) {
        throw InvalidParameter("circuit width must be >= 1");
    }
    for (const auto& g : circuit.gates) {
        validate_gate(g, circuit.width);
    }
}

}  // namespace acsim
