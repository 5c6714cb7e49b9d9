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

#include "acsim/ac_model.hpp"

#include <cmath>
#include <random>
#include <string>

#include "acsim/errors.hpp"
#include "acsim/rng.hpp"

namespace acsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate_params(const ACParameters& params) {
    if (!std::isfinite(params.gamma0) || params.gamma0 == 0.0) {
        throw InvalidParameter("gamma0 must be finite and nonzero");
    }
    if (params.n_max < 1) {
        throw InvalidParameter("n_max must be >= 1");
    }
    if (!std::isfinite(params.crosstalk_lambda) || params.crosstalk_lambda < 0.0) {
        throw InvalidParameter("crosstalk_lambda must be finite and >= 0");
    }
}

void validate_noise(const NoiseSpec& noise) {
    if (!std::isfinite(noise.sigma_path) || noise.sigma_path < 0.0 ||
        !std::isfinite(noise.sigma_theta) || noise.sigma_theta < 0.0 ||
        !std::isfinite(noise.crosstalk_lambda) || noise.crosstalk_lambda < 0.0) {
        throw InvalidParameter("noise parameters must be finite and >= 0");
    }
}

const ACQubit& qubit_at(const Layout& layout, int index, const char* who) {
    if (index < 0 || index >= static_cast<int>(layout.qubits.size())) {
        throw IndexOutOfRange(std::string(who) + " references qubit " + std::to_string(index) +
                              " outside the layout");
    }
    return layout.qubits[static_cast<std::size_t>(index)];
}

}  // namespace

Layout make_line_layout(int num_qubits, double d_min) {
    if (num_qubits < 1) {
        throw InvalidParameter("layout needs at least one qubit");
    }
    if (!std::isfinite(d_min) || d_min <= 0.0) {
        throw InvalidParameter("d_min must be finite and > 0");
    }
    Layout layout;
    layout.d_min = d_min;
    layout.qubits.reserve(static_cast<std::size_t>(num_qubits));
    for (int k = 0; k < num_qubits; ++k) {
        const double x = 10.0 * static_cast<double>(k) * d_min;
        layout.qubits.push_back({k, {x, 0.0}, {x, d_min}});
    }
    return layout;
}

void validate_layout(const Layout& layout) {
    if (layout.qubits.empty()) {
        throw InvalidParameter("layout needs at least one qubit");
    }
    if (!std::isfinite(layout.d_min) || layout.d_min <= 0.0) {
        throw InvalidParameter("d_min must be finite and > 0");
    }
    std::vector<Point2> sites;
    for (std::size_t k = 0; k < layout.qubits.size(); ++k) {
        const ACQubit& q = layout.qubits[k];
        if (q.index != static_cast<int>(k)) {
            throw InvalidParameter("layout qubit indices must run 0..N-1 in order");
        }
        sites.push_back(q.site_a);
        sites.push_back(q.site_b);
    }
    for (std::size_t i = 0; i < sites.size(); ++i) {
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            if (std::hypot(sites[i].x - sites[j].x, sites[i].y - sites[j].y) < layout.d_min) {
                throw InvalidParameter("layout sites closer than d_min");
            }
        }
    }
}

void validate_schedule(const BraidSchedule& schedule) {
    validate_layout(schedule.layout);
    for (const auto& move : schedule.moves) {
        std::visit(
            [&](const auto& m) {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, InterQubitLoop>) {
                    qubit_at(schedule.layout, m.control, "loop");
                    qubit_at(schedule.layout, m.target, "loop");
                    if (m.control == m.target) {
                        throw InvalidParameter("inter-qubit loop needs two distinct qubits");
                    }
                    validate_path(m.path);
                    if (!m.path.closed) {
                        throw DegeneratePath("loop path must be closed");
                    }
                } else if constexpr (std::is_same_v<T, ConditionalSelfLoop>) {
                    qubit_at(schedule.layout, m.target, "conditional loop");
                    validate_path(m.path);
                    if (!m.path.closed) {
                        throw DegeneratePath("loop path must be closed");
                    }
                } else {
                    qubit_at(schedule.layout, m.target, "beam splitter");
                    if (!std::isfinite(m.theta)) {
                        throw InvalidParameter("beam-splitter angle must be finite");
                    }
                }
            },
            move);
    }
}

double ac_phase(long n, const ACParameters& params) {
    validate_params(params);
    if (std::labs(n) > params.n_max) {
        throw WindingOutOfRange("winding " + std::to_string(n) + " exceeds n_max " +
                                std::to_string(params.n_max));
    }
    return static_cast<double>(n) * params.gamma0;
}

Polyline canonical_loop_path(const Point2& site, double d_min, long turns) {
    if (turns == 0) {
        // Zero-winding placeholder: a small circle beside the site so the
        // move exists but encloses nothing.
        return circle_path({site.x + d_min / 2.0, site.y}, d_min / 8.0, 1, 32);
    }
    return circle_path(site, d_min / 4.0, turns, 32);
}

QuantizedPhase quantize_phase(double angle, double gamma0, double period, int n_max) {
    if (!std::isfinite(angle)) {
        throw InvalidParameter("angle must be finite");
    }
    // Residuals carry rounding error of order |n * gamma0| * eps, so two
    // candidates within kTie of each other count as a tie and the smaller
    // |n|, scanned first, keeps the slot.
    constexpr double kTie = 1e-12;
    QuantizedPhase best{0, std::remainder(angle, period)};
    for (int n = 1; n <= n_max; ++n) {
        for (const long cand : {static_cast<long>(n), -static_cast<long>(n)}) {
            const double r = std::remainder(angle - static_cast<double>(cand) * gamma0, period);
            if (std::abs(r) < std::abs(best.residual) - kTie) {
                best = {cand, r};
            }
        }
    }
    return best;
}

MoveGate gate_of_move(const BraidMove& move, const Layout& layout, const ACParameters& params) {
    validate_params(params);
    return std::visit(
        [&](const auto& m) -> MoveGate {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, InterQubitLoop>) {
                const Point2 site = qubit_at(layout, m.control, "loop").site_a;
                qubit_at(layout, m.target, "loop");
                const long n = winding_number(m.path, site).n;
                return {ControlledPhase{m.control, m.target, ac_phase(n, params)}, 0.0};
            } else if constexpr (std::is_same_v<T, ConditionalSelfLoop>) {
                // Physical action diag(e^{i n gamma0}, 1)
                //   = e^{i n gamma0 / 2} * u_phase_matrix(-n gamma0).
                const Point2 site = qubit_at(layout, m.target, "conditional loop").site_b;
                const long n = winding_number(m.path, site).n;
                const double gamma = ac_phase(n, params);
                return {OneQubitPhase{m.target, -gamma}, gamma / 2.0};
            } else {
                qubit_at(layout, m.target, "beam splitter");
                return {PartialSwap{m.target, m.theta}, 0.0};
            }
        },
        move);
}

BraidSchedule compile_circuit(const Circuit& circuit, const Layout& layout,
                              const ACParameters& params) {
    validate_circuit(circuit);
    validate_layout(layout);
    validate_params(params);
    if (static_cast<int>(layout.qubits.size()) != circuit.width) {
        throw WidthMismatch("layout holds " + std::to_string(layout.qubits.size()) +
                            " qubits but the circuit is " + std::to_string(circuit.width) +
                            " wide");
    }

    BraidSchedule schedule;
    schedule.layout = layout;
    for (std::size_t idx = 0; idx < circuit.gates.size(); ++idx) {
        std::visit(
            [&](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, ControlledPhase>) {
                    const auto q = quantize_phase(g.gamma, params.gamma0, kTwoPi, params.n_max);
                    if (std::abs(q.residual) > 1e-9) {
                        throw PhaseNotQuantized(
                            idx, q.n, q.residual,
                            "gate " + std::to_string(idx) + ": controlled phase " +
                                std::to_string(g.gamma) + " is not a multiple of gamma0 (nearest n " +
                                std::to_string(q.n) + ", residual " + std::to_string(q.residual) +
                                ")");
                    }
                    const Point2 site = qubit_at(layout, g.control, "controlled phase").site_a;
                    schedule.moves.push_back(InterQubitLoop{
                        g.control, g.target, canonical_loop_path(site, layout.d_min, q.n)});
                } else if constexpr (std::is_same_v<T, OneQubitPhase>) {
                    // The realized gate of a winding-w self-loop is
                    // u_phase(-w gamma0), so emit w = -n.
                    const auto q =
                        quantize_phase(g.gamma, params.gamma0, 2.0 * kTwoPi, params.n_max);
                    if (std::abs(q.residual) > 1e-9) {
                        throw PhaseNotQuantized(
                            idx, q.n, q.residual,
                            "gate " + std::to_string(idx) + ": phase " + std::to_string(g.gamma) +
                                " is not a multiple of gamma0 (nearest n " + std::to_string(q.n) +
                                ", residual " + std::to_string(q.residual) + ")");
                    }
                    const Point2 site = qubit_at(layout, g.target, "phase gate").site_b;
                    schedule.moves.push_back(ConditionalSelfLoop{
                        g.target, canonical_loop_path(site, layout.d_min, -q.n)});
                } else {
                    qubit_at(layout, g.target, "partial swap");
                    schedule.moves.push_back(BeamSplitterMove{g.target, g.theta});
                }
            },
            circuit.gates[idx]);
    }
    return schedule;
}

ExecutionResult execute_schedule(const BraidSchedule& schedule, const ACParameters& params,
                                 const NoiseSpec& noise, std::uint64_t seed) {
    validate_schedule(schedule);
    validate_params(params);
    validate_noise(noise);

    const Layout& layout = schedule.layout;
    ExecutionResult result;
    result.realized.width = static_cast<int>(layout.qubits.size());

    auto add_crosstalk = [&](const Polyline& path, int skip_a, int skip_b) {
        if (noise.crosstalk_lambda <= 0.0) {
            return;
        }
        for (const ACQubit& q : layout.qubits) {
            if (q.index == skip_a || q.index == skip_b) {
                continue;
            }
            const double stray =
                std::max(crosstalk_phase(path, q.site_a, noise.crosstalk_lambda),
                         crosstalk_phase(path, q.site_b, noise.crosstalk_lambda));
            result.realized.gates.push_back(OneQubitPhase{q.index, stray});
        }
    };

    for (std::size_t i = 0; i < schedule.moves.size(); ++i) {
        const std::uint64_t move_seed = mix_seed(seed, i);
        std::visit(
            [&](const auto& m) {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, InterQubitLoop>) {
                    const Point2 site = layout.qubits[static_cast<std::size_t>(m.control)].site_a;
                    const long expected = winding_number(m.path, site).n;
                    const ResolvedLoop loop =
                        resolve_loop(perturb_path(m.path, noise.sigma_path, move_seed), site);
                    if (loop.winding != expected) {
                        result.faults.entries.push_back(
                            {i, expected, loop.winding, loop.clearance});
                    }
                    result.realized.gates.push_back(ControlledPhase{
                        m.control, m.target, static_cast<double>(loop.winding) * params.gamma0});
                    add_crosstalk(loop.path, m.control, m.target);
                } else if constexpr (std::is_same_v<T, ConditionalSelfLoop>) {
                    const Point2 site = layout.qubits[static_cast<std::size_t>(m.target)].site_b;
                    const long expected = winding_number(m.path, site).n;
                    const ResolvedLoop loop =
                        resolve_loop(perturb_path(m.path, noise.sigma_path, move_seed), site);
                    if (loop.winding != expected) {
                        result.faults.entries.push_back(
                            {i, expected, loop.winding, loop.clearance});
                    }
                    const double gamma = static_cast<double>(loop.winding) * params.gamma0;
                    result.realized.gates.push_back(OneQubitPhase{m.target, -gamma});
                    result.global_phase += gamma / 2.0;
                    add_crosstalk(loop.path, m.target, m.target);
                } else {
                    double theta = m.theta;
                    if (noise.sigma_theta > 0.0) {
                        std::mt19937_64 engine(move_seed);
                        std::normal_distribution<double> gauss(0.0, noise.sigma_theta);
                        theta += gauss(engine);
                    }
                    result.realized.gates.push_back(PartialSwap{m.target, theta});
                }
            },
            schedule.moves[i]);
    }
    return result;
}

ResolvedLoop resolve_loop(const Polyline& path, const Point2& site) {
    ResolvedLoop out;
    out.path = path;
    out.clearance = min_distance(out.path, site);
    if (out.clearance <= kEpsClearance) {
        const Point2 near = closest_point(out.path, site);
        const double d = std::hypot(near.x - site.x, near.y - site.y);
        const double ux = d > 0.0 ? (near.x - site.x) / d : 1.0;
        const double uy = d > 0.0 ? (near.y - site.y) / d : 0.0;
        out.path = translate(out.path, 2.0 * kEpsClearance * ux, 2.0 * kEpsClearance * uy);
        out.clearance = min_distance(out.path, site);
        if (out.clearance <= kEpsClearance) {
            out.skipped = true;
            return out;
        }
    }
    out.winding = winding_number(out.path, site).n;
    return out;
}

double crosstalk_phase(const Polyline& path, const Point2& other_site, double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0) {
        throw InvalidParameter("lambda must be finite and >= 0");
    }
    if (lambda == 0.0) {
        return 0.0;
    }
    return lambda / std::max(min_distance(path, other_site), kEpsClearance);
}

}  // namespace acsim
