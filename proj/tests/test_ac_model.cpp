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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "acsim/ac_model.hpp"
#include "acsim/errors.hpp"
#include "acsim/rng.hpp"
#include "helpers.hpp"

using namespace acsim;
using test::from_unitary;
using test::max_diff;

namespace {

constexpr double kPi = std::numbers::pi;

bool same_gate(const Gate& a, const Gate& b) {
    if (a.index() != b.index()) {
        return false;
    }
    if (const auto* pa = std::get_if<OneQubitPhase>(&a)) {
        const auto& pb = std::get<OneQubitPhase>(b);
        return pa->target == pb.target && pa->gamma == pb.gamma;
    }
    if (const auto* sa = std::get_if<PartialSwap>(&a)) {
        const auto& sb = std::get<PartialSwap>(b);
        return sa->target == sb.target && sa->theta == sb.theta;
    }
    const auto& ca = std::get<ControlledPhase>(a);
    const auto& cb = std::get<ControlledPhase>(b);
    return ca.control == cb.control && ca.target == cb.target && ca.gamma == cb.gamma;
}

}  // namespace

TEST_CASE("ac_phase", "[ac_model]") {
    ACParameters params;  // gamma0 = pi/2
    CHECK(ac_phase(0, params) == 0.0);
    CHECK(ac_phase(2, params) == Catch::Approx(kPi));
    CHECK(ac_phase(-1, params) == Catch::Approx(-kPi / 2));
    CHECK_THROWS_AS(ac_phase(65, params), WindingOutOfRange);
    CHECK_THROWS_AS(ac_phase(-65, params), WindingOutOfRange);

    params.gamma0 = 0.0;
    CHECK_THROWS_AS(ac_phase(1, params), InvalidParameter);
}

TEST_CASE("line layout", "[ac_model]") {
    const Layout layout = make_line_layout(3, 2.0);
    REQUIRE(layout.qubits.size() == 3);
    CHECK(layout.qubits[1].site_a == Point2{20.0, 0.0});
    CHECK(layout.qubits[1].site_b == Point2{20.0, 2.0});
    CHECK_NOTHROW(validate_layout(layout));

    SECTION("sites closer than d_min are rejected") {
        Layout bad = layout;
        bad.qubits[1].site_b = {20.0, 0.5};
        CHECK_THROWS_AS(validate_layout(bad), InvalidParameter);
    }
    SECTION("indices must run in order") {
        Layout bad = layout;
        bad.qubits[2].index = 5;
        CHECK_THROWS_AS(validate_layout(bad), InvalidParameter);
    }
}

TEST_CASE("gate_of_move", "[ac_model]") {
    const ACParameters params;
    const Layout layout = make_line_layout(2, 1.0);
    const Point2 site_a0 = layout.qubits[0].site_a;

    SECTION("inter-qubit loop of winding 1 gives B(gamma0)") {
        const BraidMove move = InterQubitLoop{0, 1, circle_path(site_a0, 0.2, 1, 32)};
        const MoveGate mg = gate_of_move(move, layout, params);
        const auto& cp = std::get<ControlledPhase>(mg.gate);
        CHECK(cp.control == 0);
        CHECK(cp.target == 1);
        CHECK(cp.gamma == params.gamma0);
        CHECK(mg.global_phase == 0.0);
    }
    SECTION("conditional self-loop tracks the split global phase") {
        const Point2 site_b0 = layout.qubits[0].site_b;
        const BraidMove move = ConditionalSelfLoop{0, circle_path(site_b0, 0.2, 1, 32)};
        const MoveGate mg = gate_of_move(move, layout, params);
        const auto& ph = std::get<OneQubitPhase>(mg.gate);
        CHECK(ph.gamma == -params.gamma0);
        CHECK(mg.global_phase == Catch::Approx(params.gamma0 / 2));

        // 2x2 oracle: e^{i phi} u_phase(-gamma0) must equal diag(e^{i gamma0}, 1)
        Unitary2 reconstructed = u_phase_matrix(ph.gamma);
        const cplx phase = std::polar(1.0, mg.global_phase);
        for (auto& e : reconstructed.m) {
            e *= phase;
        }
        Unitary2 physical;
        physical.at(0, 0) = std::polar(1.0, params.gamma0);
        physical.at(1, 1) = 1.0;
        CHECK(max_diff(from_unitary(reconstructed), from_unitary(physical)) < 1e-12);
    }
    SECTION("beam splitter passes through") {
        const MoveGate mg = gate_of_move(BeamSplitterMove{1, kPi / 2}, layout, params);
        const auto& sw = std::get<PartialSwap>(mg.gate);
        CHECK(sw.target == 1);
        CHECK(sw.theta == kPi / 2);
    }
    SECTION("winding beyond n_max is rejected") {
        ACParameters tight;
        tight.n_max = 2;
        const BraidMove move = InterQubitLoop{0, 1, circle_path(site_a0, 0.2, 3, 16)};
        CHECK_THROWS_AS(gate_of_move(move, layout, tight), WindingOutOfRange);
    }
    SECTION("a loop through the site has no winding") {
        Polyline through = circle_path(site_a0, 0.2, 1, 32);
        through = translate(through, 0.2, 0.0);  // now passes through the site
        const BraidMove move = InterQubitLoop{0, 1, through};
        CHECK_THROWS_AS(gate_of_move(move, layout, params), PathTooClose);
    }
}

TEST_CASE("quantize_phase", "[ac_model]") {
    const double g0 = kPi / 2;
    SECTION("exact multiples have zero residual") {
        for (long n = -8; n <= 8; ++n) {
            const auto q = quantize_phase(static_cast<double>(n) * g0, g0, 4 * kPi, 64);
            CHECK(q.residual == 0.0);
        }
    }
    SECTION("smallest |n| wins among equivalent multiples") {
        // 2.2e-16 is within rounding noise of zero; a faraway multiple of
        // the period must not beat n = 0
        const auto q = quantize_phase(2.2e-16, g0, 4 * kPi, 64);
        CHECK(q.n == 0);
    }
    SECTION("half multiples are flagged") {
        const auto q = quantize_phase(1.5 * g0, g0, 2 * kPi, 64);
        CHECK(std::abs(q.residual) == Catch::Approx(g0 / 2));
    }
    SECTION("period folding") {
        const auto q = quantize_phase(g0 + 2 * kPi, g0, 2 * kPi, 64);
        CHECK(q.n == 1);
        CHECK(std::abs(q.residual) < 1e-12);
    }
}

TEST_CASE("compile_circuit", "[ac_model]") {
    const ACParameters params;
    const Layout layout = make_line_layout(2, 1.0);

    SECTION("controlled phase of 2*gamma0 becomes one double loop") {
        const Circuit circuit{2, {ControlledPhase{0, 1, 2 * params.gamma0}}};
        const BraidSchedule schedule = compile_circuit(circuit, layout, params);
        REQUIRE(schedule.moves.size() == 1);
        const auto& loop = std::get<InterQubitLoop>(schedule.moves[0]);
        CHECK(winding_number(loop.path, layout.qubits[0].site_a).n == 2);
        // canonical loop: radius d_min/4 around site a
        CHECK(min_distance(loop.path, layout.qubits[0].site_a) ==
              Catch::Approx(0.25 * std::cos(kPi / 32)));
    }
    SECTION("non-multiples are rejected with diagnostics") {
        const Circuit circuit{2, {ControlledPhase{0, 1, 1.5 * params.gamma0}}};
        try {
            compile_circuit(circuit, layout, params);
            FAIL("expected PhaseNotQuantized");
        } catch (const PhaseNotQuantized& e) {
            CHECK(e.gate_index == 0);
            CHECK(std::abs(e.residual) == Catch::Approx(params.gamma0 / 2));
        }
    }
    SECTION("zero-phase gates compile to zero-winding loops") {
        const Circuit circuit{2, {ControlledPhase{0, 1, 0.0}, OneQubitPhase{1, 0.0}}};
        const BraidSchedule schedule = compile_circuit(circuit, layout, params);
        REQUIRE(schedule.moves.size() == 2);
        const auto& loop = std::get<InterQubitLoop>(schedule.moves[0]);
        CHECK(winding_number(loop.path, layout.qubits[0].site_a).n == 0);
        const ExecutionResult exec = execute_schedule(schedule, params, NoiseSpec{}, 0);
        REQUIRE(exec.realized.gates.size() == 2);
        CHECK(std::get<ControlledPhase>(exec.realized.gates[0]).gamma == 0.0);
    }
    SECTION("width must match the layout") {
        const Circuit circuit{3, {}};
        CHECK_THROWS_AS(compile_circuit(circuit, layout, params), WidthMismatch);
    }
}

TEST_CASE("compile then read back is the identity on quantized circuits",
          "[ac_model][property]") {
    const ACParameters params;
    const Layout layout = make_line_layout(3, 1.0);
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> qubit(0, 2);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long> cp_n(-1, 2);
    std::uniform_int_distribution<long> up_n(-3, 3);
    std::uniform_real_distribution<double> theta(-3.0, 3.0);

    for (int round = 0; round < 50; ++round) {
        Circuit circuit{3, {}};
        for (int g = 0; g < 30; ++g) {
            const int j = qubit(rng);
            switch (kind(rng)) {
                case 0:
                    circuit.gates.push_back(
                        OneQubitPhase{j, static_cast<double>(up_n(rng)) * params.gamma0});
                    break;
                case 1:
                    circuit.gates.push_back(PartialSwap{j, theta(rng)});
                    break;
                default: {
                    const int k = (j + 1 + qubit(rng) % 2) % 3;
                    circuit.gates.push_back(
                        ControlledPhase{j, k, static_cast<double>(cp_n(rng)) * params.gamma0});
                }
            }
        }
        const BraidSchedule schedule = compile_circuit(circuit, layout, params);
        REQUIRE(schedule.moves.size() == circuit.gates.size());
        for (std::size_t i = 0; i < schedule.moves.size(); ++i) {
            const MoveGate mg = gate_of_move(schedule.moves[i], layout, params);
            // bit-for-bit identical gate, angle included
            REQUIRE(same_gate(mg.gate, circuit.gates[i]));
        }
    }
}

TEST_CASE("round trip up to gate periodicity", "[ac_model]") {
    const ACParameters params;
    const Layout layout = make_line_layout(2, 1.0);
    const Circuit circuit{2, {ControlledPhase{0, 1, params.gamma0 + 2 * kPi}}};
    const BraidSchedule schedule = compile_circuit(circuit, layout, params);
    const MoveGate mg = gate_of_move(schedule.moves[0], layout, params);
    const auto& cp = std::get<ControlledPhase>(mg.gate);
    CHECK(cp.gamma == params.gamma0);  // folded by one period
    CHECK(max_diff(from_unitary(b_matrix(cp.gamma)),
                   from_unitary(b_matrix(params.gamma0 + 2 * kPi))) < 1e-12);
}

TEST_CASE("execute_schedule", "[ac_model]") {
    const ACParameters params;
    const Layout layout = make_line_layout(2, 1.0);
    const Circuit circuit{2, {ControlledPhase{0, 1, params.gamma0}, PartialSwap{1, 0.4},
                              OneQubitPhase{0, params.gamma0}}};
    const BraidSchedule schedule = compile_circuit(circuit, layout, params);

    SECTION("zero noise reproduces the circuit exactly") {
        const ExecutionResult exec = execute_schedule(schedule, params, NoiseSpec{}, 123);
        REQUIRE(exec.realized.gates.size() == circuit.gates.size());
        for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
            CHECK(same_gate(exec.realized.gates[i], circuit.gates[i]));
        }
        CHECK(exec.faults.entries.empty());
        // one conditional loop of winding -1: global phase -gamma0/2
        CHECK(exec.global_phase == Catch::Approx(-params.gamma0 / 2));
    }
    SECTION("small jitter leaves every phase exactly quantized") {
        NoiseSpec noise;
        noise.sigma_path = 0.01;  // clearance is ~0.249
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const ExecutionResult exec = execute_schedule(schedule, params, noise, seed);
            CHECK(exec.faults.entries.empty());
            CHECK(std::get<ControlledPhase>(exec.realized.gates[0]).gamma == params.gamma0);
        }
    }
    SECTION("sigma comparable to clearance produces a recorded fault") {
        NoiseSpec noise;
        noise.sigma_path = 0.15;
        const ExecutionResult exec = execute_schedule(schedule, params, noise, 5);
        REQUIRE_FALSE(exec.faults.entries.empty());
        const FaultEntry& entry = exec.faults.entries[0];
        CHECK(entry.move_index == 0);
        CHECK(entry.expected_winding == 1);
        CHECK(entry.realized_winding == 2);
        CHECK(entry.realized_winding !=
              entry.expected_winding);  // log holds only real faults
        // the realized gate follows the realized winding
        CHECK(std::get<ControlledPhase>(exec.realized.gates[0]).gamma == 2.0 * params.gamma0);
    }
    SECTION("theta jitter moves beam-splitter angles only") {
        NoiseSpec noise;
        noise.sigma_theta = 0.05;
        const ExecutionResult exec = execute_schedule(schedule, params, noise, 7);
        CHECK(std::get<PartialSwap>(exec.realized.gates[1]).theta != 0.4);
        CHECK(std::get<ControlledPhase>(exec.realized.gates[0]).gamma == params.gamma0);
        CHECK(exec.faults.entries.empty());
    }
    SECTION("executions are deterministic per seed") {
        NoiseSpec noise;
        noise.sigma_path = 0.1;
        noise.sigma_theta = 0.1;
        const ExecutionResult a = execute_schedule(schedule, params, noise, 99);
        const ExecutionResult b = execute_schedule(schedule, params, noise, 99);
        REQUIRE(a.realized.gates.size() == b.realized.gates.size());
        for (std::size_t i = 0; i < a.realized.gates.size(); ++i) {
            CHECK(same_gate(a.realized.gates[i], b.realized.gates[i]));
        }
    }
}

TEST_CASE("crosstalk", "[ac_model]") {
    SECTION("formula") {
        const Polyline square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}, true};
        CHECK(crosstalk_phase(square, {3.0, 0.5}, 0.0) == 0.0);
        CHECK(crosstalk_phase(square, {3.0, 0.5}, 0.1) == Catch::Approx(0.05));
        // doubling every distance halves the phase
        const Polyline big{{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 0}}, true};
        CHECK(crosstalk_phase(big, {6.0, 1.0}, 0.1) == Catch::Approx(0.025));
    }
    SECTION("bystander qubits pick up stray phases during execution") {
        const ACParameters params;
        const Layout layout = make_line_layout(3, 1.0);
        const Circuit circuit{3, {ControlledPhase{0, 1, params.gamma0}}};
        const BraidSchedule schedule = compile_circuit(circuit, layout, params);

        NoiseSpec quiet;
        const ExecutionResult clean = execute_schedule(schedule, params, quiet, 0);
        CHECK(clean.realized.gates.size() == 1);

        NoiseSpec noisy;
        noisy.crosstalk_lambda = 0.1;
        const ExecutionResult exec = execute_schedule(schedule, params, noisy, 0);
        REQUIRE(exec.realized.gates.size() == 2);
        const auto& stray = std::get<OneQubitPhase>(exec.realized.gates[1]);
        CHECK(stray.target == 2);
        const auto& loop = std::get<InterQubitLoop>(schedule.moves[0]);
        const double expected =
            std::max(crosstalk_phase(loop.path, layout.qubits[2].site_a, 0.1),
                     crosstalk_phase(loop.path, layout.qubits[2].site_b, 0.1));
        CHECK(stray.gamma == Catch::Approx(expected));
    }
}

TEST_CASE("winding-preserving perturbations keep the gate bit-identical",
          "[ac_model][property]") {
    const ACParameters params;
    const Layout layout = make_line_layout(2, 1.0);
    const Circuit circuit{2, {ControlledPhase{0, 1, params.gamma0}}};
    const BraidSchedule schedule = compile_circuit(circuit, layout, params);
    const auto& loop = std::get<InterQubitLoop>(schedule.moves[0]);
    const Point2 site = layout.qubits[0].site_a;
    const double clearance = winding_number(loop.path, site).clearance;

    NoiseSpec noise;
    noise.sigma_path = 0.02;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        // confirm this seed's displacement stays below the clearance
        const Polyline perturbed = perturb_path(loop.path, noise.sigma_path, mix_seed(seed, 0));
        double max_disp = 0.0;
        for (std::size_t i = 0; i < perturbed.vertices.size(); ++i) {
            max_disp = std::max(max_disp,
                                std::hypot(perturbed.vertices[i].x - loop.path.vertices[i].x,
                                           perturbed.vertices[i].y - loop.path.vertices[i].y));
        }
        REQUIRE(max_disp < clearance);

        const ExecutionResult exec = execute_schedule(schedule, params, noise, seed);
        REQUIRE(exec.faults.entries.empty());
        const auto& cp = std::get<ControlledPhase>(exec.realized.gates[0]);
        REQUIRE(cp.gamma == params.gamma0);  // bitwise, not approximately
    }
}

TEST_CASE("resolve_loop clearance policy", "[ac_model]") {
    SECTION("clean paths pass through") {
        const Polyline circle = circle_path({0, 0}, 1.0, 1, 32);
        const ResolvedLoop r = resolve_loop(circle, {0, 0});
        CHECK_FALSE(r.skipped);
        CHECK(r.winding == 1);
        CHECK(r.clearance == Catch::Approx(std::cos(kPi / 32)));
    }
    SECTION("a path grazing the site is nudged away and still resolves") {
        Polyline grazing = circle_path({0, 0}, 1.0, 1, 32);
        grazing = translate(grazing, 1.0, 0.0);  // vertex exactly on the site
        const ResolvedLoop r = resolve_loop(grazing, {0, 0});
        CHECK_FALSE(r.skipped);
        CHECK(r.clearance > kEpsClearance);
    }
}
