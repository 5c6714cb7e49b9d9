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
#include <numbers>
#include <variant>
#include <vector>

#include "acsim/gates.hpp"
#include "acsim/geometry.hpp"

namespace acsim {

/// Physical constants of the Aharonov-Casher layer.
///
/// gamma0 is the phase acquired per single winding of a charge around a
/// dipole; it absorbs the dipole moment, the charge, and hbar into one
/// dimensionless knob. The default pi/2 makes winding 2 produce the
/// entangling controlled phase B(pi).
struct ACParameters {
    double gamma0 = std::numbers::pi / 2.0;
    int n_max = 64;              ///< largest winding magnitude the compiler may emit
    double crosstalk_lambda = 0.0;  ///< default stray-phase strength, see NoiseSpec
};

/// One qubit stored on two labelled sites: |0> = charge at a, dipole at b;
/// |1> = the reverse configuration.
struct ACQubit {
    int index = 0;
    Point2 site_a;
    Point2 site_b;
};

/// Qubits along a line. d_min is the minimum separation between any two
/// sites, within or between qubits.
struct Layout {
    std::vector<ACQubit> qubits;
    double d_min = 1.0;
};

/// Noise applied when a schedule is executed. sigma_path jitters loop
/// vertices, sigma_theta jitters beam-splitter angles, crosstalk_lambda
/// scales the stray inverse-distance phase picked up by bystander qubits.
struct NoiseSpec {
    double sigma_path = 0.0;
    double sigma_theta = 0.0;
    double crosstalk_lambda = 0.0;
};

/// Carries the particle at site b of qubit `target` around site a of qubit
/// `control` along an explicit closed path; realizes a controlled phase.
struct InterQubitLoop {
    int control = 0;
    int target = 0;
    Polyline path;
};

/// Carries the particle at site a of qubit `target` around site b, executed
/// only when site a holds the charge; realizes a one-qubit phase up to a
/// tracked global phase.
struct ConditionalSelfLoop {
    int target = 0;
    Polyline path;
};

/// Beam-splitter event on one qubit; realizes a partial swap.
struct BeamSplitterMove {
    int target = 0;
    double theta = 0.0;
};

using BraidMove = std::variant<InterQubitLoop, ConditionalSelfLoop, BeamSplitterMove>;

struct BraidSchedule {
    Layout layout;
    std::vector<BraidMove> moves;
};

struct FaultEntry {
    std::size_t move_index = 0;
    long expected_winding = 0;
    long realized_winding = 0;
    double clearance = 0.0;
};

/// Moves whose realized winding differs from the expected one.
struct FaultLog {
    std::vector<FaultEntry> entries;
};

/// A gate together with the global phase (radians) by which the gate matrix
/// must be multiplied to equal the physical action of the move.
struct MoveGate {
    Gate gate;
    double global_phase = 0.0;
};

struct ExecutionResult {
    Circuit realized;
    FaultLog faults;
    double global_phase = 0.0;  ///< accumulated over all moves
};

/// Canonical line layout: qubit k at x = 10*k*d_min, site a at (x, 0),
/// site b at (x, d_min).
Layout make_line_layout(int num_qubits, double d_min);

/// Throws unless all pairwise site distances are >= d_min and qubit indices
/// run 0..N-1 in order.
void validate_layout(const Layout& layout);
void validate_schedule(const BraidSchedule& schedule);

/// The topological phase law: phase = n * gamma0.
/// Throws WindingOutOfRange when |n| > n_max.
double ac_phase(long n, const ACParameters& params);

/// Canonical compiled loop of winding `turns` around `site`: a circle of
/// radius d_min/4 centered on the site, 32 samples per turn. For turns == 0
/// the loop is a circle of radius d_min/8 centered d_min/2 to the right of
/// the site, which does not enclose it.
Polyline canonical_loop_path(const Point2& site, double d_min, long turns);

/// Nearest integer n with |n| <= n_max such that n * gamma0 matches `angle`
/// modulo `period`. Smaller |n| wins ties. residual is the leftover angle.
struct QuantizedPhase {
    long n = 0;
    double residual = 0.0;
};
QuantizedPhase quantize_phase(double angle, double gamma0, double period, int n_max);

/// Logical gate realized by one physical move, with windings measured
/// geometrically from the move's path.
MoveGate gate_of_move(const BraidMove& move, const Layout& layout, const ACParameters& params);

/// Translates a circuit into canonical physical moves. Every phase-type gate
/// angle must be an integer multiple of gamma0 within 1e-9 (modulo 2*pi for
/// controlled phases, modulo 4*pi for one-qubit phases), else
/// PhaseNotQuantized is thrown with the offending gate index.
BraidSchedule compile_circuit(const Circuit& circuit, const Layout& layout,
                              const ACParameters& params);

/// Runs a schedule under noise: loop paths get Gaussian vertex jitter,
/// beam-splitter angles get Gaussian angle jitter, and windings are
/// recomputed from the perturbed geometry. Winding changes are recorded in
/// the fault log. With crosstalk_lambda > 0 every loop also deposits a stray
/// one-qubit phase of lambda / d on each non-participating qubit, where d is
/// the distance from the loop to that qubit's nearest site. Deterministic
/// per seed: move i draws from mix_seed(seed, i).
///
/// A perturbed path that violates the clearance floor is retried once,
/// translated 2*kEpsClearance radially away from the encircled site; if it
/// still violates, the move executes as the identity and is logged.
ExecutionResult execute_schedule(const BraidSchedule& schedule, const ACParameters& params,
                                 const NoiseSpec& noise, std::uint64_t seed);

/// Stray phase lambda / max(min_distance(path, site), kEpsClearance).
double crosstalk_phase(const Polyline& path, const Point2& other_site, double lambda);

/// Outcome of settling one (possibly perturbed) loop against its encircled
/// site: the final path, its winding, and its clearance. skipped means the
/// clearance floor was violated even after the deterministic retry, so the
/// move degrades to the identity (winding 0).
struct ResolvedLoop {
    Polyline path;
    long winding = 0;
    double clearance = 0.0;
    bool skipped = false;
};

/// Applies the clearance policy to a loop path: a path within kEpsClearance
/// of the site is retried once, translated 2*kEpsClearance radially away
/// from the site; a second violation marks the loop skipped. Otherwise the
/// winding is recomputed geometrically.
ResolvedLoop resolve_loop(const Polyline& path, const Point2& site);

}  // namespace acsim
