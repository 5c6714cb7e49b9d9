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

#include "acsim/formats.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "acsim/errors.hpp"

namespace acsim {

namespace {

struct Line {
    std::size_t number = 0;
    std::string keyword;            // upper-cased first token
    std::vector<std::string> args;  // remaining tokens
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream words(raw);
        Line line;
        line.number = number;
        std::string token;
        while (words >> token) {
            if (line.keyword.empty()) {
                for (char& ch : token) {
                    ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
                }
                line.keyword = token;
            } else {
                line.args.push_back(token);
            }
        }
        if (!line.keyword.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

long parse_long(const Line& line, std::size_t arg) {
    try {
        std::size_t used = 0;
        const long value = std::stol(line.args.at(arg), &used);
        if (used != line.args[arg].size()) {
            throw std::invalid_argument("trailing characters");
        }
        return value;
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected an integer, got '" + line.args[arg] + "'");
    }
}

int parse_index(const Line& line, std::size_t arg) {
    const long value = parse_long(line, arg);
    if (value < 0 || value > 1'000'000) {
        throw ParseError(line.number, "qubit index out of range");
    }
    return static_cast<int>(value);
}

double parse_real(const Line& line, std::size_t arg) {
    try {
        std::size_t used = 0;
        const double value = std::stod(line.args.at(arg), &used);
        if (used != line.args[arg].size()) {
            throw std::invalid_argument("trailing characters");
        }
        return value;
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected a number, got '" + line.args[arg] + "'");
    }
}

void require_args(const Line& line, std::size_t count) {
    if (line.args.size() != count) {
        throw ParseError(line.number, line.keyword + " expects " + std::to_string(count) +
                                          " arguments, got " + std::to_string(line.args.size()));
    }
}

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) {
        throw ParseError(0, "empty circuit file");
    }

    Circuit circuit;
    bool have_width = false;
    for (const Line& line : lines) {
        if (line.keyword == "WIDTH") {
            if (have_width) {
                throw ParseError(line.number, "duplicate WIDTH line");
            }
            require_args(line, 1);
            const long width = parse_long(line, 0);
            if (width < 1 || width > 24) {
                throw ParseError(line.number, "WIDTH must be in [1, 24]");
            }
            circuit.width = static_cast<int>(width);
            have_width = true;
            continue;
        }
        if (!have_width) {
            throw ParseError(line.number, "WIDTH must come before any gate");
        }
        if (line.keyword == "UPHASE") {
            require_args(line, 2);
            circuit.gates.push_back(OneQubitPhase{parse_index(line, 0), parse_real(line, 1)});
        } else if (line.keyword == "USWAP") {
            require_args(line, 2);
            circuit.gates.push_back(PartialSwap{parse_index(line, 0), parse_real(line, 1)});
        } else if (line.keyword == "B") {
            require_args(line, 3);
            circuit.gates.push_back(
                ControlledPhase{parse_index(line, 0), parse_index(line, 1), parse_real(line, 2)});
        } else {
            throw ParseError(line.number, "unknown keyword '" + line.keyword + "'");
        }
        try {
            validate_gate(circuit.gates.back(), circuit.width);
        } catch (const Error& e) {
            throw ParseError(line.number, e.what());
        }
    }
    if (!have_width) {
        throw ParseError(lines.front().number, "circuit file needs a WIDTH line");
    }
    return circuit;
}

Circuit parse_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return parse_circuit(in);
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
    out << "WIDTH " << circuit.width << "\n";
    for (const Gate& gate : circuit.gates) {
        std::visit(
            [&](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, OneQubitPhase>) {
                    out << "UPHASE " << g.target << ' ' << fmt_real(g.gamma) << "\n";
                } else if constexpr (std::is_same_v<T, PartialSwap>) {
                    out << "USWAP " << g.target << ' ' << fmt_real(g.theta) << "\n";
                } else {
                    out << "B " << g.control << ' ' << g.target << ' ' << fmt_real(g.gamma)
                        << "\n";
                }
            },
            gate);
    }
}

BraidSchedule parse_schedule(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) {
        throw ParseError(0, "empty schedule file");
    }

    BraidSchedule schedule;
    bool have_layout = false;

    auto qubit_index = [&](const Line& line, std::size_t arg) {
        const int j = parse_index(line, arg);
        if (j >= static_cast<int>(schedule.layout.qubits.size())) {
            throw ParseError(line.number, "qubit " + std::to_string(j) + " outside layout");
        }
        return j;
    };

    auto check_declared_winding = [&](const Line& line, const Polyline& path, const Point2& site,
                                      long declared) {
        const long actual = winding_number(path, site).n;
        if (actual != declared) {
            throw ParseError(line.number, "path winds " + std::to_string(actual) +
                                              " times but the line declares " +
                                              std::to_string(declared));
        }
    };

    for (const Line& line : lines) {
        if (line.keyword == "LAYOUT") {
            if (have_layout) {
                throw ParseError(line.number, "duplicate LAYOUT line");
            }
            require_args(line, 2);
            const long n = parse_long(line, 0);
            const double d_min = parse_real(line, 1);
            if (n < 1 || n > 24) {
                throw ParseError(line.number, "LAYOUT qubit count must be in [1, 24]");
            }
            if (!(d_min > 0.0)) {
                throw ParseError(line.number, "LAYOUT d_min must be > 0");
            }
            schedule.layout = make_line_layout(static_cast<int>(n), d_min);
            have_layout = true;
            continue;
        }
        if (!have_layout) {
            throw ParseError(line.number, "LAYOUT must come before any move");
        }
        if (line.keyword == "LOOP") {
            if (line.args.size() < 3) {
                throw ParseError(line.number, "LOOP expects <j> <j'> <n_turns> [vertices]");
            }
            const int control = qubit_index(line, 0);
            const int target = qubit_index(line, 1);
            if (control == target) {
                throw ParseError(line.number, "LOOP needs two distinct qubits");
            }
            const long turns = parse_long(line, 2);
            const Point2 site = schedule.layout.qubits[static_cast<std::size_t>(control)].site_a;
            Polyline path;
            if (line.args.size() == 3) {
                path = canonical_loop_path(site, schedule.layout.d_min, turns);
            } else {
                const std::size_t coords = line.args.size() - 3;
                if (coords % 2 != 0 || coords < 6) {
                    throw ParseError(line.number,
                                     "LOOP vertices must be at least 3 x/y pairs");
                }
                path.closed = true;
                for (std::size_t k = 0; k < coords; k += 2) {
                    path.vertices.push_back(
                        {parse_real(line, 3 + k), parse_real(line, 3 + k + 1)});
                }
                const Point2 first = path.vertices.front();
                const Point2 last = path.vertices.back();
                if (std::hypot(first.x - last.x, first.y - last.y) > kVertexTol) {
                    path.vertices.push_back(first);
                }
                check_declared_winding(line, path, site, turns);
            }
            schedule.moves.push_back(InterQubitLoop{control, target, std::move(path)});
        } else if (line.keyword == "CONDLOOP") {
            require_args(line, 2);
            const int target = qubit_index(line, 0);
            const long turns = parse_long(line, 1);
            const Point2 site = schedule.layout.qubits[static_cast<std::size_t>(target)].site_b;
            schedule.moves.push_back(ConditionalSelfLoop{
                target, canonical_loop_path(site, schedule.layout.d_min, turns)});
        } else if (line.keyword == "BS") {
            require_args(line, 2);
            const int target = qubit_index(line, 0);
            schedule.moves.push_back(BeamSplitterMove{target, parse_real(line, 1)});
        } else {
            throw ParseError(line.number, "unknown keyword '" + line.keyword + "'");
        }
    }
    validate_schedule(schedule);
    return schedule;
}

BraidSchedule parse_schedule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return parse_schedule(in);
}

void write_schedule(std::ostream& out, const BraidSchedule& schedule) {
    out << "LAYOUT " << schedule.layout.qubits.size() << ' ' << fmt_real(schedule.layout.d_min)
        << "\n";
    for (const BraidMove& move : schedule.moves) {
        std::visit(
            [&](const auto& m) {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, InterQubitLoop>) {
                    const Point2 site =
                        schedule.layout.qubits[static_cast<std::size_t>(m.control)].site_a;
                    const long n = winding_number(m.path, site).n;
                    out << "LOOP " << m.control << ' ' << m.target << ' ' << n;
                    if (m.path.vertices !=
                        canonical_loop_path(site, schedule.layout.d_min, n).vertices) {
                        for (const Point2& p : m.path.vertices) {
                            out << ' ' << fmt_real(p.x) << ' ' << fmt_real(p.y);
                        }
                    }
                    out << "\n";
                } else if constexpr (std::is_same_v<T, ConditionalSelfLoop>) {
                    const Point2 site =
                        schedule.layout.qubits[static_cast<std::size_t>(m.target)].site_b;
                    const long n = winding_number(m.path, site).n;
                    if (m.path.vertices !=
                        canonical_loop_path(site, schedule.layout.d_min, n).vertices) {
                        throw InvalidParameter(
                            "conditional loops with custom paths have no file representation");
                    }
                    out << "CONDLOOP " << m.target << ' ' << n << "\n";
                } else {
                    out << "BS " << m.target << ' ' << fmt_real(m.theta) << "\n";
                }
            },
            move);
    }
}

void write_schedule_file(const std::string& path, const BraidSchedule& schedule) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidParameter("cannot open '" + path + "' for writing");
    }
    write_schedule(out, schedule);
}

}  // namespace acsim
