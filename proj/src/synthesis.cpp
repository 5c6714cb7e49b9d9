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

#include "acsim/synthesis.hpp"

#include <cmath>
#include <numbers>

#include "acsim/errors.hpp"

namespace acsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGimbalTol = 1e-12;

Unitary2 multiply(const Unitary2& a, const Unitary2& b) {
    Unitary2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
        }
    }
    return out;
}

/// Checks pi/2 is reachable as an integer multiple of gamma0 both modulo
/// 2*pi (controlled phase) and modulo 4*pi (one-qubit phase).
void require_half_pi_quantized(const ACParameters& params) {
    for (const double period : {2.0 * kPi, 4.0 * kPi}) {
        const auto q = quantize_phase(kPi / 2.0, params.gamma0, period, params.n_max);
        if (std::abs(q.residual) > 1e-9) {
            throw PhaseNotQuantized(0, q.n, q.residual,
                                    "pi/2 is not an integer multiple of gamma0; the CZ "
                                    "construction is not reachable topologically");
        }
    }
}

}  // namespace

void require_unitary(const Unitary2& u, double tol) {
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            // (U'U)[r][c]
            cplx e = std::conj(u.at(0, r)) * u.at(0, c) + std::conj(u.at(1, r)) * u.at(1, c);
            if (r == c) {
                e -= 1.0;
            }
            if (std::abs(e) > tol) {
                throw NotUnitary("matrix is not unitary within tolerance");
            }
        }
    }
}

EulerAngles euler_decompose(const Unitary2& u) {
    require_unitary(u);

    // det U = e^{2 i phi}; dividing it out leaves an SU(2) matrix
    // [[e^{-i(alpha+delta)/2} cos(beta/2), -e^{-i(alpha-delta)/2} sin(beta/2)],
    //  [e^{+i(alpha-delta)/2} sin(beta/2),  e^{+i(alpha+delta)/2} cos(beta/2)]].
    const cplx det = u.at(0, 0) * u.at(1, 1) - u.at(0, 1) * u.at(1, 0);
    EulerAngles out;
    out.global_phase = 0.5 * std::arg(det);
    const cplx unphase = std::polar(1.0, -out.global_phase);
    const cplx v00 = unphase * u.at(0, 0);
    const cplx v10 = unphase * u.at(1, 0);
    const cplx v11 = unphase * u.at(1, 1);

    out.beta = 2.0 * std::atan2(std::abs(v10), std::abs(v00));
    if (out.beta < kGimbalTol) {
        out.alpha = 2.0 * std::arg(v11);
        out.delta = 0.0;
    } else if (kPi - out.beta < kGimbalTol) {
        out.alpha = 2.0 * std::arg(v10);
        out.delta = 0.0;
    } else {
        const double half_sum = std::arg(v11);
        const double half_diff = std::arg(v10);
        out.alpha = half_sum + half_diff;
        out.delta = half_sum - half_diff;
    }
    return out;
}

Unitary2 euler_reconstruct(const EulerAngles& angles) {
    Unitary2 u = multiply(u_phase_matrix(angles.alpha),
                          multiply(u_swap_matrix(angles.beta), u_phase_matrix(angles.delta)));
    const cplx phase = std::polar(1.0, angles.global_phase);
    for (auto& e : u.m) {
        e *= phase;
    }
    return u;
}

SynthesizedFragment synthesize_one_qubit(const Unitary2& u, int target) {
    const EulerAngles angles = euler_decompose(u);
    SynthesizedFragment frag;
    frag.global_phase = angles.global_phase;
    constexpr double kDropTol = 1e-12;  // angles this close to zero are identity gates
    if (std::abs(angles.delta) > kDropTol) {
        frag.gates.push_back(OneQubitPhase{target, angles.delta});
    }
    if (std::abs(angles.beta) > kDropTol) {
        frag.gates.push_back(PartialSwap{target, angles.beta});
    }
    if (std::abs(angles.alpha) > kDropTol) {
        frag.gates.push_back(OneQubitPhase{target, angles.alpha});
    }
    return frag;
}

SynthesizedCircuit cz_construction(const ACParameters& params) {
    require_half_pi_quantized(params);
    // B(pi/2) (U(pi/2) x U(pi/2)) = diag(1, 1, 1, -1) exactly: the diagonal
    // phase-matching equations force both one-qubit angles to pi/2 and leave
    // no residual global phase.
    SynthesizedCircuit out;
    out.circuit.width = 2;
    out.circuit.gates = {OneQubitPhase{0, kPi / 2.0}, OneQubitPhase{1, kPi / 2.0},
                         ControlledPhase{0, 1, kPi / 2.0}};
    out.global_phase = 0.0;
    return out;
}

SynthesizedCircuit cnot_construction(const ACParameters& params) {
    SynthesizedCircuit out = cz_construction(params);

    Unitary2 hadamard;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    hadamard.at(0, 0) = inv_sqrt2;
    hadamard.at(0, 1) = inv_sqrt2;
    hadamard.at(1, 0) = inv_sqrt2;
    hadamard.at(1, 1) = -inv_sqrt2;
    const SynthesizedFragment h = synthesize_one_qubit(hadamard, 1);

    std::vector<Gate> gates;
    gates.insert(gates.end(), h.gates.begin(), h.gates.end());
    gates.insert(gates.end(), out.circuit.gates.begin(), out.circuit.gates.end());
    gates.insert(gates.end(), h.gates.begin(), h.gates.end());
    out.circuit.gates = std::move(gates);
    out.global_phase += 2.0 * h.global_phase;
    return out;
}

double phase_distance(const std::vector<cplx>& u, const std::vector<cplx>& v) {
    if (u.size() != v.size() || u.empty()) {
        throw DimensionMismatch("phase distance needs two equal-size square matrices");
    }
    const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(u.size()))));
    if (dim * dim != u.size()) {
        throw DimensionMismatch("matrix is not square");
    }
    // tr(U'V) only needs the diagonal of the product.
    cplx trace = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t k = 0; k < dim; ++k) {
            trace += std::conj(u[k * dim + r]) * v[k * dim + r];
        }
    }
    const double overlap = std::abs(trace) / static_cast<double>(dim);
    return std::sqrt(std::max(0.0, 1.0 - overlap));
}

double phase_distance(const Unitary2& u, const Unitary2& v) {
    return phase_distance(std::vector<cplx>(u.m.begin(), u.m.end()),
                          std::vector<cplx>(v.m.begin(), v.m.end()));
}

double phase_distance(const Unitary4& u, const Unitary4& v) {
    return phase_distance(std::vector<cplx>(u.m.begin(), u.m.end()),
                          std::vector<cplx>(v.m.begin(), v.m.end()));
}

}  // namespace acsim
