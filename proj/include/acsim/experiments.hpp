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
#include <iosfwd>
#include <string>
#include <vector>

#include "acsim/ac_model.hpp"
#include "acsim/geometry.hpp"

namespace acsim {

struct SweepRow {
    double param = 0.0;
    long trials = 0;
    double fault_rate = 0.0;
    double mean_fidelity = 0.0;
    double std_error = 0.0;  ///< binomial standard error of fault_rate
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

/// Phase of the nontopological comparator gate: lambda_area times the signed
/// enclosed area, so it tracks the path's geometry instead of its topology.
double dynamical_comparator_phase(const Polyline& path, double lambda_area);

/// |<psi_ideal|psi_real>|^2 for controlled-phase gates of angles `ideal` and
/// `realized` acting on the uniform two-qubit superposition; equals
/// cos^2((realized - ideal) / 2) and is exactly 1.0 when the angles are
/// bit-identical.
double phase_fidelity(double ideal, double realized);

struct DeformationSweepConfig {
    std::vector<double> sigmas;
    long trials = 1000;
    std::uint64_t seed = 0;
    double gamma0 = std::numbers::pi / 2.0;
    /// Comparator strength in radians per unit area; 0 auto-calibrates to
    /// make the comparator's ideal phase equal the topological one.
    double lambda_area = 0.0;
};

struct DeformationSweepResult {
    SweepResult topological;
    SweepResult dynamical;
};

/// For each sigma, perturbs the base path `trials` times (trial t draws from
/// mix_seed(seed, t), shared across sigmas and across the two gate types) and
/// scores:
///  - the topological gate by its realized winding phase, faults being
///    winding changes;
///  - the dynamical comparator by its realized area phase, faults being
///    phase shifts above 1e-9 rad.
DeformationSweepResult sweep_deformation(const Polyline& base_path, const Point2& center,
                                         const DeformationSweepConfig& config);

struct WindingSweepConfig {
    std::vector<long> n_values{1, 2, 4, 8};
    double sigma = 0.0;
    long trials = 1000;
    std::uint64_t seed = 0;
    double gamma0 = std::numbers::pi / 2.0;
    double radius = 1.0;  ///< canonical loop radius = clearance
};

/// For each n, builds the canonical n-turn loop and reports the empirical
/// probability that perturbation changes its winding.
SweepResult sweep_winding(const WindingSweepConfig& config);

enum class DJOracle { const0, const1, balanced_id, balanced_not };

/// Parses one of const0, const1, balanced_id, balanced_not.
DJOracle dj_oracle_from_string(const std::string& name);

/// Two-qubit Deutsch-Jozsa run end to end: the circuit is assembled from
/// synthesized Hadamards plus the compiled oracle, compiled to a braid
/// schedule, executed noise-free, simulated, and measured. Returns
/// "constant" or "balanced".
std::string demo_deutsch_jozsa(DJOracle oracle, const ACParameters& params, std::uint64_t seed);

/// CSV with header param,trials,fault_rate,mean_fidelity,std_error and
/// 12-significant-digit floats; deterministic bytes for a fixed result.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace acsim
