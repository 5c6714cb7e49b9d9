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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acsim/ac_model.hpp"
#include "acsim/errors.hpp"
#include "acsim/experiments.hpp"
#include "acsim/formats.hpp"
#include "acsim/rng.hpp"
#include "acsim/simulator.hpp"

namespace {

using namespace acsim;

constexpr int kExitParse = 2;
constexpr int kExitQuantization = 3;
constexpr int kExitGeometry = 4;

std::uint64_t env_seed() {
    const char* env = std::getenv("ACSIM_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    try {
        std::size_t used = 0;
        const std::uint64_t seed = std::stoull(env, &used);
        if (used != std::string(env).size()) {
            throw std::invalid_argument("trailing characters");
        }
        return seed;
    } catch (const std::exception&) {
        throw InvalidParameter("ACSIM_SEED must be a nonnegative integer");
    }
}

std::string fmt12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void print_histogram(std::ostream& out, const StateVector& state, long shots,
                     std::uint64_t seed, const char* prefix) {
    std::map<std::string, long> counts;
    for (long shot = 0; shot < shots; ++shot) {
        counts[measure_all(state, mix_seed(seed, static_cast<std::uint64_t>(shot))).bitstring]++;
    }
    for (const auto& [bits, count] : counts) {
        out << prefix << bits << ' ' << count << ' '
            << fmt12(static_cast<double>(count) / static_cast<double>(shots)) << "\n";
    }
}

std::string default_input(int width) { return std::string(static_cast<std::size_t>(width), '0'); }

struct SweepCommon {
    long trials = 1000;
    std::uint64_t seed = 0;
    double gamma0 = std::numbers::pi / 2.0;
    std::string out_path;
};

void add_sweep_common(CLI::App* cmd, SweepCommon& common) {
    cmd->add_option("--trials", common.trials, "Monte Carlo trials per parameter point")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", common.seed, "run seed (default from ACSIM_SEED, else 0)");
    cmd->add_option("--gamma0", common.gamma0, "phase per single winding in radians");
    cmd->add_option("-o,--output", common.out_path, "output CSV path")->required();
}

void write_csv_file(const std::string& path, const SweepResult& result) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidParameter("cannot open '" + path + "' for writing");
    }
    write_sweep_csv(out, result);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Simulator of quantum computation on the planar Aharonov-Casher setup:\n"
                 "gates arise from winding numbers of explicit transport paths."};
    app.require_subcommand(1);
    const std::uint64_t seed_default = env_seed();

    // ---- run ----
    auto* run = app.add_subcommand("run", "simulate a circuit file and print a shot histogram");
    std::string run_file;
    std::string run_input;
    long run_shots = 1024;
    std::uint64_t run_seed = seed_default;
    run->add_option("circuit", run_file, "circuit file")->required();
    run->add_option("--input", run_input, "initial basis state (default all zeros)");
    run->add_option("--shots", run_shots, "number of measurement shots")
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", run_seed, "measurement seed");
    run->callback([&] {
        const Circuit circuit = parse_circuit_file(run_file);
        if (run_input.empty()) {
            run_input = default_input(circuit.width);
        }
        const StateVector final_state = run_circuit(init_state(circuit.width, run_input), circuit);
        print_histogram(std::cout, final_state, run_shots, run_seed, "");
    });

    // ---- compile ----
    auto* compile = app.add_subcommand("compile", "translate a circuit into a braid schedule");
    std::string compile_file;
    std::string compile_out;
    double compile_gamma0 = std::numbers::pi / 2.0;
    double compile_dmin = 1.0;
    int compile_nmax = 64;
    compile->add_option("circuit", compile_file, "circuit file")->required();
    compile->add_option("--gamma0", compile_gamma0, "phase per single winding in radians");
    compile->add_option("--dmin", compile_dmin, "minimum site separation of the line layout")
        ->check(CLI::PositiveNumber);
    compile->add_option("--nmax", compile_nmax, "largest winding the compiler may emit")
        ->check(CLI::PositiveNumber);
    compile->add_option("-o,--output", compile_out, "schedule file to write")->required();
    compile->callback([&] {
        const Circuit circuit = parse_circuit_file(compile_file);
        ACParameters params;
        params.gamma0 = compile_gamma0;
        params.n_max = compile_nmax;
        const Layout layout = make_line_layout(circuit.width, compile_dmin);
        write_schedule_file(compile_out, compile_circuit(circuit, layout, params));
    });

    // ---- execute ----
    auto* execute = app.add_subcommand(
        "execute", "run a schedule under noise; print realized circuit, faults and histogram");
    std::string exec_file;
    NoiseSpec noise;
    std::uint64_t exec_seed = seed_default;
    double exec_gamma0 = std::numbers::pi / 2.0;
    std::string exec_input;
    long exec_shots = 1024;
    execute->add_option("schedule", exec_file, "schedule file")->required();
    execute->add_option("--sigma-path", noise.sigma_path, "vertex jitter (plane units)");
    execute->add_option("--sigma-theta", noise.sigma_theta, "beam-splitter angle jitter (rad)");
    execute->add_option("--lambda", noise.crosstalk_lambda, "crosstalk stray-phase strength");
    execute->add_option("--seed", exec_seed, "noise seed");
    execute->add_option("--gamma0", exec_gamma0, "phase per single winding in radians");
    execute->add_option("--input", exec_input, "initial basis state (default all zeros)");
    execute->add_option("--shots", exec_shots, "measurement shots")->check(CLI::PositiveNumber);
    execute->callback([&] {
        const BraidSchedule schedule = parse_schedule_file(exec_file);
        ACParameters params;
        params.gamma0 = exec_gamma0;
        const ExecutionResult result = execute_schedule(schedule, params, noise, exec_seed);
        write_circuit(std::cout, result.realized);
        std::cout << "# global phase " << fmt12(result.global_phase) << "\n";
        std::cout << "# fault log: " << result.faults.entries.size() << " entries\n";
        for (const FaultEntry& entry : result.faults.entries) {
            std::cout << "# move " << entry.move_index << ": expected " << entry.expected_winding
                      << " realized " << entry.realized_winding << " clearance "
                      << fmt12(entry.clearance) << "\n";
        }
        if (exec_input.empty()) {
            exec_input = default_input(result.realized.width);
        }
        const StateVector final_state =
            run_circuit(init_state(result.realized.width, exec_input), result.realized);
        std::cout << "# histogram: " << exec_shots << " shots, input " << exec_input << "\n";
        print_histogram(std::cout, final_state, exec_shots, mix_seed(exec_seed, 0x5407), "# ");
    });

    // ---- winding ----
    auto* winding = app.add_subcommand("winding", "winding number and clearance of one move");
    std::string winding_file;
    std::size_t winding_move = 0;
    winding->add_option("schedule", winding_file, "schedule file")->required();
    winding->add_option("--move", winding_move, "move index (0-based)")->required();
    winding->callback([&] {
        const BraidSchedule schedule = parse_schedule_file(winding_file);
        if (winding_move >= schedule.moves.size()) {
            throw InvalidParameter("move index " + std::to_string(winding_move) +
                                   " outside schedule with " +
                                   std::to_string(schedule.moves.size()) + " moves");
        }
        const BraidMove& move = schedule.moves[winding_move];
        const Polyline* path = nullptr;
        Point2 site;
        if (const auto* loop = std::get_if<InterQubitLoop>(&move)) {
            path = &loop->path;
            site = schedule.layout.qubits[static_cast<std::size_t>(loop->control)].site_a;
        } else if (const auto* cond = std::get_if<ConditionalSelfLoop>(&move)) {
            path = &cond->path;
            site = schedule.layout.qubits[static_cast<std::size_t>(cond->target)].site_b;
        } else {
            throw InvalidParameter("move " + std::to_string(winding_move) +
                                   " is a beam splitter; it has no winding");
        }
        const WindingResult result = winding_number(*path, site);
        std::cout << "move " << winding_move << ": winding " << result.n << " clearance "
                  << fmt12(result.clearance) << "\n";
    });

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo robustness sweeps, CSV output");
    sweep->require_subcommand(1);

    auto* deformation = sweep->add_subcommand(
        "deformation", "fidelity and fault rate of topological vs area-based gates vs sigma");
    SweepCommon def_common;
    def_common.seed = seed_default;
    std::vector<double> def_sigmas{0.0, 0.005, 0.01, 0.02, 0.05};
    double def_radius = 0.25;
    long def_turns = 1;
    double def_lambda_area = 0.0;
    std::string def_gate = "topological";
    deformation->add_option("--sigmas", def_sigmas, "vertex jitter values (plane units)")
        ->delimiter(',');
    deformation->add_option("--radius", def_radius, "base loop radius = clearance")
        ->check(CLI::PositiveNumber);
    deformation->add_option("--turns", def_turns, "base loop winding");
    deformation->add_option("--lambda-area", def_lambda_area,
                            "comparator strength, rad per unit area (0 = auto-match)");
    deformation->add_option("--gate", def_gate, "which gate's rows to write")
        ->check(CLI::IsMember({"topological", "dynamical"}));
    add_sweep_common(deformation, def_common);
    deformation->callback([&] {
        const Polyline base = circle_path({0.0, 0.0}, def_radius, def_turns, 32);
        DeformationSweepConfig cfg;
        cfg.sigmas = def_sigmas;
        cfg.trials = def_common.trials;
        cfg.seed = def_common.seed;
        cfg.gamma0 = def_common.gamma0;
        cfg.lambda_area = def_lambda_area;
        const DeformationSweepResult result = sweep_deformation(base, {0.0, 0.0}, cfg);
        write_csv_file(def_common.out_path,
                       def_gate == "topological" ? result.topological : result.dynamical);
    });

    auto* winding_sweep =
        sweep->add_subcommand("winding", "fault probability vs loop winding number");
    SweepCommon wind_common;
    wind_common.seed = seed_default;
    std::vector<long> wind_n{1, 2, 4, 8};
    double wind_sigma = 0.35;
    double wind_radius = 1.0;
    winding_sweep->add_option("--n", wind_n, "winding numbers to test")->delimiter(',');
    winding_sweep->add_option("--sigma", wind_sigma, "vertex jitter (plane units)");
    winding_sweep->add_option("--radius", wind_radius, "loop radius = clearance")
        ->check(CLI::PositiveNumber);
    add_sweep_common(winding_sweep, wind_common);
    winding_sweep->callback([&] {
        WindingSweepConfig cfg;
        cfg.n_values = wind_n;
        cfg.sigma = wind_sigma;
        cfg.trials = wind_common.trials;
        cfg.seed = wind_common.seed;
        cfg.gamma0 = wind_common.gamma0;
        cfg.radius = wind_radius;
        write_csv_file(wind_common.out_path, sweep_winding(cfg));
    });

    // ---- demo ----
    auto* demo = app.add_subcommand("demo", "end-to-end demo algorithms");
    demo->require_subcommand(1);
    auto* dj = demo->add_subcommand("dj", "two-qubit Deutsch-Jozsa through the full pipeline");
    std::string dj_oracle;
    std::uint64_t dj_seed = seed_default;
    double dj_gamma0 = std::numbers::pi / 2.0;
    dj->add_option("--oracle", dj_oracle, "const0, const1, balanced_id or balanced_not")
        ->required();
    dj->add_option("--seed", dj_seed, "pipeline seed");
    dj->add_option("--gamma0", dj_gamma0, "phase per single winding in radians");
    dj->callback([&] {
        ACParameters params;
        params.gamma0 = dj_gamma0;
        std::cout << demo_deutsch_jozsa(dj_oracle_from_string(dj_oracle), params, dj_seed)
                  << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PhaseNotQuantized& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitQuantization;
    } catch (const PathTooClose& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGeometry;
    } catch (const DegeneratePath& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGeometry;
    } catch (const NonIntegerAngleSum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGeometry;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
