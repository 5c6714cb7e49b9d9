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

#pragma once

#include <array>
#include <complex>
#include <variant>
#include <vector>

namespace acsim {

using cplx = std::complex<double>;

/// 2x2 complex matrix, row major, basis order {|0>, |1>}.
struct Unitary2 {
    std::array<cplx, 4> m{};

    cplx& at(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
    const cplx& at(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
};

/// 4x4 complex matrix, row major, basis order {|00>, |01>, |10>, |11>} with
/// the left symbol belonging to the first (control) qubit index.
struct Unitary4 {
    std::array<cplx, 16> m{};

    cplx& at(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
    const cplx& at(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }
};

/// Phase shift gate U(gamma) = exp(-i*gamma/2 * sigma_z) on one qubit.
struct OneQubitPhase {
    int target = 0;
    double gamma = 0.0;
};

/// Partial swap gate U_SWAP(theta) = exp(-i*theta/2 * sigma_y) on one qubit.
struct PartialSwap {
    int target = 0;
    double theta = 0.0;
};

/// Controlled phase shift gate B(gamma) = diag(e^{i gamma}, 1, 1, e^{i gamma})
/// on two distinct qubits. B is symmetric in its qubits; the names only fix
/// the basis-label order.
struct ControlledPhase {
    int control = 0;
    int target = 0;
    double gamma = 0.0;
};

using Gate = std::variant<OneQubitPhase, PartialSwap, ControlledPhase>;

struct Circuit {
    int width = 1;
    std::vector<Gate> gates;
};

/// diag(e^{-i gamma/2}, e^{+i gamma/2}) with sigma_z = |0><0| - |1><1|.
Unitary2 u_phase_matrix(double gamma);

/// [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]] with
/// sigma_y = -i|0><1| + i|1><0|.
Unitary2 u_swap_matrix(double theta);

/// diag(e^{i gamma}, 1, 1, e^{i gamma}) on {|00>, |01>, |10>, |11>}.
Unitary4 b_matrix(double gamma);

/// Beam-splitter transmission for the partial swap, defined as
/// T = cos(theta/2). Note this is the bare cosine, not the squared-modulus
/// cos^2(theta/2) a two-port amplitude convention would produce; callers
/// wanting a probability must square it themselves.
double transmission(double theta);

/// Matrix of a single gate on its own one- or two-qubit subspace.
std::variant<Unitary2, Unitary4> gate_matrix(const Gate& gate);

/// Throws InvalidParameter / IndexOutOfRange when a gate's angles are not
/// finite or its qubit indices do not fit the given circuit width.
void validate_gate(const Gate& gate, int width);
void validate_circuit(const Circuit& circuit);

}  // namespace acsim
