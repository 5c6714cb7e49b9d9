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

#include <vector>

#include "acsim/ac_model.hpp"
#include "acsim/gates.hpp"

namespace acsim {

/// ZYZ Euler angles: U = e^{i phi} * u_phase(alpha) * u_swap(beta) *
/// u_phase(delta), with beta in [0, pi]. At the gimbal-lock points beta = 0
/// and beta = pi (within 1e-12) the whole z-rotation folds into alpha and
/// delta is fixed to 0, so the decomposition is deterministic.
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double global_phase = 0.0;
};

/// One-qubit circuit fragment plus the global phase by which its gate
/// product must be multiplied to reproduce the source unitary.
struct SynthesizedFragment {
    std::vector<Gate> gates;
    double global_phase = 0.0;
};

/// Two-qubit construction with the same global-phase convention.
struct SynthesizedCircuit {
    Circuit circuit;
    double global_phase = 0.0;
};

/// Throws NotUnitary unless U'U = I entrywise within tol.
void require_unitary(const Unitary2& u, double tol = 1e-10);

/// Exact ZYZ decomposition of a 2x2 unitary over the phase/partial-swap
/// generator pair. Throws NotUnitary when U is not unitary within 1e-10.
EulerAngles euler_decompose(const Unitary2& u);

/// e^{i phi} * u_phase(alpha) * u_swap(beta) * u_phase(delta).
Unitary2 euler_reconstruct(const EulerAngles& angles);

/// Gate fragment [OneQubitPhase(delta), PartialSwap(beta),
/// OneQubitPhase(alpha)] in application order, with exact-zero angles
/// dropped.
SynthesizedFragment synthesize_one_qubit(const Unitary2& u, int target);

/// CZ = diag(1, 1, 1, -1) from one ControlledPhase(0, 1, pi/2) and a
/// OneQubitPhase(pi/2) on each qubit; the tracked global phase is 0.
/// Throws PhaseNotQuantized unless pi/2 is an integer multiple of gamma0.
SynthesizedCircuit cz_construction(const ACParameters& params);

/// CNOT (control 0, target 1) as the CZ construction conjugated on the
/// target by the synthesized Hadamard fragment.
SynthesizedCircuit cnot_construction(const ACParameters& params);

/// Phase-invariant distance sqrt(max(0, 1 - |tr(U'V)| / dim)); zero exactly
/// when U and V agree up to a global phase. The vector form takes row-major
/// square matrices and throws DimensionMismatch when shapes differ.
double phase_distance(const std::vector<cplx>& u, const std::vector<cplx>& v);
double phase_distance(const Unitary2& u, const Unitary2& v);
double phase_distance(const Unitary4& u, const Unitary4& v);

}  // namespace acsim
