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

#include "acsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "acsim/errors.hpp"

namespace acsim {

namespace {

constexpr int kMaxWidth = 24;  // 2^24 amplitudes; well past desk scale

void check_width(int width) {
    if (width < 1 || width > kMaxWidth) {
        throw InvalidParameter("state width must be in [1, " + std::to_string(kMaxWidth) + "]");
    }
}

/// Bit position (from the least significant end) of qubit j.
int bit_of_qubit(int width, int qubit) { return width - 1 - qubit; }

}  // namespace

std::size_t basis_index(int width, std::string_view bitstring) {
    check_width(width);
    if (static_cast<int>(bitstring.size()) != width) {
        throw LengthMismatch("bitstring length " + std::to_string(bitstring.size()) +
                             " does not match width " + std::to_string(width));
    }
    std::size_t index = 0;
    for (char ch : bitstring) {
        if (ch != '0' && ch != '1') {
            throw InvalidParameter("bitstring may only contain 0 and 1");
        }
        index = (index << 1) | static_cast<std::size_t>(ch - '0');
    }
    return index;
}

StateVector init_state(int width, std::string_view bitstring) {
    StateVector state;
    state.width = width;
    state.amplitudes.assign(std::size_t{1} << width, cplx{0.0, 0.0});
    state.amplitudes[basis_index(width, bitstring)] = 1.0;
    return state;
}

StateVector apply(const StateVector& state, const Gate& gate) {
    validate_gate(gate, state.width);
    StateVector out = state;

    if (const auto* cp = std::get_if<ControlledPhase>(&gate)) {
        const cplx phase = std::polar(1.0, cp->gamma);
        const int pc = bit_of_qubit(state.width, cp->control);
        const int pt = bit_of_qubit(state.width, cp->target);
        for (std::size_t i = 0; i < out.dim(); ++i) {
            const bool bc = (i >> pc) & 1U;
            const bool bt = (i >> pt) & 1U;
            if (bc == bt) {
                out.amplitudes[i] *= phase;
            }
        }
        return out;
    }

    Unitary2 u;
    int target = 0;
    if (const auto* ph = std::get_if<OneQubitPhase>(&gate)) {
        u = u_phase_matrix(ph->gamma);
        target = ph->target;
    } else {
        const auto& sw = std::get<PartialSwap>(gate);
        u = u_swap_matrix(sw.theta);
        target = sw.target;
    }
    const std::size_t mask = std::size_t{1} << bit_of_qubit(state.width, target);
    for (std::size_t i = 0; i < out.dim(); ++i) {
        if (i & mask) {
            continue;
        }
        const cplx a0 = state.amplitudes[i];
        const cplx a1 = state.amplitudes[i | mask];
        out.amplitudes[i] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
        out.amplitudes[i | mask] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
    }
    return out;
}

StateVector run_circuit(const StateVector& state, const Circuit& circuit) {
    if (circuit.width != state.width) {
        throw WidthMismatch("circuit width " + std::to_string(circuit.width) +
                            " does not match state width " + std::to_string(state.width));
    }
    StateVector out = state;
    for (const auto& gate : circuit.gates) {
        out = acsim::apply(out, gate);
    }
    return out;
}

double probability(const StateVector& state, std::string_view bitstring) {
    return std::norm(state.amplitudes[basis_index(state.width, bitstring)]);
}

MeasurementOutcome measure_all(const StateVector& state, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double u = uniform(engine);

    std::size_t picked = state.dim() - 1;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        cumulative += std::norm(state.amplitudes[i]);
        if (u < cumulative) {
            picked = i;
            break;
        }
    }

    std::string bits(static_cast<std::size_t>(state.width), '0');
    for (int j = 0; j < state.width; ++j) {
        if ((picked >> bit_of_qubit(state.width, j)) & 1U) {
            bits[static_cast<std::size_t>(j)] = '1';
        }
    }
    return {bits, init_state(state.width, bits)};
}

double concurrence(const StateVector& state) {
    if (state.width != 2) {
        throw WidthMismatch("concurrence is defined here for two-qubit states only");
    }
    // <psi| sigma_y x sigma_y |psi*> collapses to 2 (a00 a11 - a01 a10).
    const auto& a = state.amplitudes;
    const double c = 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]);
    return std::min(c, 1.0);
}

double norm_squared(const StateVector& state) {
    double total = 0.0;
    for (const cplx& amp : state.amplitudes) {
        total += std::norm(amp);
    }
    return total;
}

}  // namespace acsim
