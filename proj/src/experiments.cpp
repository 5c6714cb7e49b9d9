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

#include "acsim/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "acsim/errors.hpp"
#include "acsim/rng.hpp"
#include "acsim/simulator.hpp"
#include "acsim/synthesis.hpp"

namespace acsim {

namespace {

double binomial_std_error(long faults, long trials) {
    const double p = static_cast<double>(faults) / static_cast<double>(trials);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

std::string fmt12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

double dynamical_comparator_phase(const Polyline& path, double lambda_area) {
    if (!std::isfinite(lambda_area)) {
        throw InvalidParameter("lambda_area must be finite");
    }
    return lambda_area * enclosed_area(path);
}

double phase_fidelity(double ideal, double realized) {
    const double c = std::cos((realized - ideal) / 2.0);
    return c * c;
}

DeformationSweepResult sweep_deformation(const Polyline& base_path, const Point2& center,
                                         const DeformationSweepConfig& config) {
    if (config.trials < 1) {
        throw InvalidParameter("sweep needs at least one trial");
    }
    for (const double sigma : config.sigmas) {
        if (!std::isfinite(sigma) || sigma < 0.0) {
            throw InvalidParameter("sweep sigma must be finite and >= 0");
        }
    }
    const long n0 = winding_number(base_path, center).n;
    const double area0 = enclosed_area(base_path);
    const double topo_phase0 = static_cast<double>(n0) * config.gamma0;
    double lambda_area = config.lambda_area;
    if (lambda_area == 0.0) {
        lambda_area = (n0 != 0 && area0 != 0.0) ? topo_phase0 / area0 : 1.0;
    }
    const double dyn_phase0 = lambda_area * area0;

    DeformationSweepResult result;
    for (const double sigma : config.sigmas) {
        long topo_faults = 0;
        long dyn_faults = 0;
        double topo_fid = 0.0;
        double dyn_fid = 0.0;
        for (long t = 0; t < config.trials; ++t) {
            const Polyline perturbed = perturb_path(base_path, sigma, mix_seed(config.seed, static_cast<std::uint64_t>(t)));

            const ResolvedLoop loop = resolve_loop(perturbed, center);
            const double topo_phase = static_cast<double>(loop.winding) * config.gamma0;
            topo_fid += phase_fidelity(topo_phase0, topo_phase);
            if (loop.winding != n0) {
                ++topo_faults;
            }

            const double dyn_phase = dynamical_comparator_phase(perturbed, lambda_area);
            dyn_fid += phase_fidelity(dyn_phase0, dyn_phase);
            if (std::abs(dyn_phase - dyn_phase0) > 1e-9) {
                ++dyn_faults;
            }
        }
        const double trials = static_cast<double>(config.trials);
        result.topological.rows.push_back({sigma, config.trials,
                                           static_cast<double>(topo_faults) / trials,
                                           topo_fid / trials,
                                           binomial_std_error(topo_faults, config.trials)});
        result.dynamical.rows.push_back({sigma, config.trials,
                                         static_cast<double>(dyn_faults) / trials,
                                         dyn_fid / trials,
                                         binomial_std_error(dyn_faults, config.trials)});
    }
    return result;
}

SweepResult sweep_winding(const WindingSweepConfig& config) {
    if (config.trials < 1) {
        throw InvalidParameter("sweep needs at least one trial");
    }
    if (!std::isfinite(config.sigma) || config.sigma < 0.0) {
        throw InvalidParameter("sweep sigma must be finite and >= 0");
    }
    SweepResult result;
    for (const long n : config.n_values) {
        if (n < 1) {
            throw InvalidParameter("winding sweep needs n >= 1");
        }
        const Polyline base = circle_path({0.0, 0.0}, config.radius, n, 32);
        const double phase0 = static_cast<double>(n) * config.gamma0;
        long faults = 0;
        double fid = 0.0;
        for (long t = 0; t < config.trials; ++t) {
            const Polyline perturbed =
                perturb_path(base, config.sigma, mix_seed(config.seed, static_cast<std::uint64_t>(t)));
            const ResolvedLoop loop = resolve_loop(perturbed, {0.0, 0.0});
            fid += phase_fidelity(phase0, static_cast<double>(loop.winding) * config.gamma0);
            if (loop.winding != n) {
                ++faults;
            }
        }
        const double trials = static_cast<double>(config.trials);
        result.rows.push_back({static_cast<double>(n), config.trials,
                               static_cast<double>(faults) / trials, fid / trials,
                               binomial_std_error(faults, config.trials)});
    }
    return result;
}

DJOracle dj_oracle_from_string(const std::string& name) {
    if (name == "const0") {
        return DJOracle::const0;
    }
    if (name == "const1") {
        return DJOracle::const1;
    }
    if (name == "balanced_id") {
        return DJOracle::balanced_id;
    }
    if (name == "balanced_not") {
        return DJOracle::balanced_not;
    }
    throw InvalidParameter("unknown oracle '" + name +
                           "'; expected const0, const1, balanced_id or balanced_not");
}

std::string demo_deutsch_jozsa(DJOracle oracle, const ACParameters& params, std::uint64_t seed) {
    Unitary2 hadamard;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    hadamard.at(0, 0) = inv_sqrt2;
    hadamard.at(0, 1) = inv_sqrt2;
    hadamard.at(1, 0) = inv_sqrt2;
    hadamard.at(1, 1) = -inv_sqrt2;
    Unitary2 pauli_x;
    pauli_x.at(0, 1) = 1.0;
    pauli_x.at(1, 0) = 1.0;

    const auto h0 = synthesize_one_qubit(hadamard, 0).gates;
    const auto h1 = synthesize_one_qubit(hadamard, 1).gates;
    const auto x1 = synthesize_one_qubit(pauli_x, 1).gates;

    Circuit logical;
    logical.width = 2;
    auto append = [&](const std::vector<Gate>& gates) {
        logical.gates.insert(logical.gates.end(), gates.begin(), gates.end());
    };
    append(h0);
    append(h1);
    switch (oracle) {
        case DJOracle::const0:
            break;
        case DJOracle::const1:
            append(x1);
            break;
        case DJOracle::balanced_id:
            append(cnot_construction(params).circuit.gates);
            break;
        case DJOracle::balanced_not:
            append(cnot_construction(params).circuit.gates);
            append(x1);
            break;
    }
    append(h0);

    const Layout layout = make_line_layout(2, 1.0);
    const BraidSchedule schedule = compile_circuit(logical, layout, params);
    const ExecutionResult exec = execute_schedule(schedule, params, NoiseSpec{}, seed);
    const StateVector final_state = run_circuit(init_state(2, "01"), exec.realized);
    const MeasurementOutcome outcome = measure_all(final_state, mix_seed(seed, 0xac51));
    return outcome.bitstring[0] == '0' ? "constant" : "balanced";
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "param,trials,fault_rate,mean_fidelity,std_error\n";
    for (const SweepRow& row : result.rows) {
        out << fmt12(row.param) << ',' << row.trials << ',' << fmt12(row.fault_rate) << ','
            << fmt12(row.mean_fidelity) << ',' << fmt12(row.std_error) << "\n";
    }
}

}  // namespace acsim
