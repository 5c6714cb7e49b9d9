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

#include <iosfwd>
#include <string>

#include "acsim/ac_model.hpp"
#include "acsim/gates.hpp"

namespace acsim {

// Circuit files: one gate per line, '#' comments, case-insensitive keywords.
//   WIDTH <N>
//   UPHASE <j> <gamma_radians>
//   USWAP <j> <theta_radians>
//   B <j> <j'> <gamma_radians>
//
// Schedule files:
//   LAYOUT <N> <d_min>       canonical line layout (see make_line_layout)
//   LOOP <j> <j'> <n_turns> [x1 y1 x2 y2 ...]
//   CONDLOOP <j> <n_turns>
//   BS <j> <theta_radians>
// A LOOP without vertices is the canonical circle around site a of qubit j.
// Explicit vertices are closed implicitly (the first vertex is appended when
// the last one does not already repeat it) and must wind around site a of
// qubit j exactly n_turns times.

Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_file(const std::string& path);
void write_circuit(std::ostream& out, const Circuit& circuit);

BraidSchedule parse_schedule(std::istream& in);
BraidSchedule parse_schedule_file(const std::string& path);
void write_schedule(std::ostream& out, const BraidSchedule& schedule);
void write_schedule_file(const std::string& path, const BraidSchedule& schedule);

}  // namespace acsim
