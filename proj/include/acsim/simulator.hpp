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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "acsim/gates.hpp"

namespace acsim {

/// Pure state on N qubits as 2^N amplitudes. Basis label b0 b1 ... b_{N-1}
/// (qubit 0 leftmost) maps to index sum b_j * 2^{N-1-j}, so qubit 0 is the
/// most significant bit of the index.
struct StateVector {
    int width = 1;
    std::vector<cplx> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
};

struct MeasurementOutcome {
    std::string bitstring;
    StateVector collapsed;
};

/// Basis state |bitstring>. Throws LengthMismatch unless the label length
/// equals the width.
StateVector init_state(int width, std::string_view bitstring);

/// Index of a basis label under the qubit-0-most-significant convention.
std::size_t basis_index(int width, std::string_view bitstring);

/// Applies one gate on its target qubit subspace, identity elsewhere.
StateVector apply(const StateVector& state, const Gate& gate);

/// Applies all gates left to right.
StateVector run_circuit(const StateVector& state, const Circuit& circuit);

/// Born-rule probability of one basis label.
double probability(const StateVector& state, std::string_view bitstring);

/// Samples a basis label with Born-rule probabilities; deterministic per
/// seed. The collapsed member is the corresponding basis state.
MeasurementOutcome measure_all(const StateVector& state, std::uint64_t seed);

/// Pure-state concurrence |<psi| sigma_y x sigma_y |psi*>| of a two-qubit
/// state, in [0, 1]. Throws WidthMismatch for any other width.
double concurrence(const StateVector& state);

/// Sum of squared amplitude magnitudes.
double norm_squared(const StateVector& state);

}  // namespace acsim
