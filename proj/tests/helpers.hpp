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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "acsim/gates.hpp"
#include "acsim/simulator.hpp"

namespace acsim::test {

/// Dense row-major complex matrix for oracle-side linear algebra. Kept
/// independent of the simulator's stride kernels on purpose.
struct DMat {
    std::size_t dim = 0;
    std::vector<cplx> a;

    static DMat identity(std::size_t dim) {
        DMat m{dim, std::vector<cplx>(dim * dim, cplx{0.0, 0.0})};
        for (std::size_t i = 0; i < dim; ++i) {
            m.at(i, i) = 1.0;
        }
        return m;
    }

    cplx& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline DMat from_unitary(const Unitary2& u) {
    return {2, std::vector<cplx>(u.m.begin(), u.m.end())};
}

inline DMat from_unitary(const Unitary4& u) {
    return {4, std::vector<cplx>(u.m.begin(), u.m.end())};
}

inline DMat matmul(const DMat& x, const DMat& y) {
    DMat out{x.dim, std::vector<cplx>(x.dim * x.dim, cplx{0.0, 0.0})};
    for (std::size_t r = 0; r < x.dim; ++r) {
        for (std::size_t k = 0; k < x.dim; ++k) {
            for (std::size_t c = 0; c < x.dim; ++c) {
                out.at(r, c) += x.at(r, k) * y.at(k, c);
            }
        }
    }
    return out;
}

inline DMat kron(const DMat& x, const DMat& y) {
    DMat out{x.dim * y.dim, std::vector<cplx>(x.dim * y.dim * x.dim * y.dim, cplx{0.0, 0.0})};
    for (std::size_t xr = 0; xr < x.dim; ++xr) {
        for (std::size_t xc = 0; xc < x.dim; ++xc) {
            for (std::size_t yr = 0; yr < y.dim; ++yr) {
                for (std::size_t yc = 0; yc < y.dim; ++yc) {
                    out.at(xr * y.dim + yr, xc * y.dim + yc) = x.at(xr, xc) * y.at(yr, yc);
                }
            }
        }
    }
    return out;
}

inline std::vector<cplx> matvec(const DMat& m, const std::vector<cplx>& v) {
    std::vector<cplx> out(m.dim, cplx{0.0, 0.0});
    for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) {
            out[r] += m.at(r, c) * v[c];
        }
    }
    return out;
}

inline double max_diff(const DMat& x, const DMat& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
    }
    return worst;
}

inline double max_diff(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(x[i] - y[i]));
    }
    return worst;
}

/// Full 2^width x 2^width matrix of a gate, built from the gate's own small
/// matrix by Kronecker embedding under the qubit-0-most-significant
/// convention. This is the oracle the in-place kernels are checked against.
inline DMat dense_gate_matrix(const Gate& gate, int width) {
    if (const auto* cp = std::get_if<ControlledPhase>(&gate)) {
        const DMat b4 = from_unitary(b_matrix(cp->gamma));
        DMat out = DMat::identity(std::size_t{1} << width);
        for (std::size_t i = 0; i < out.dim; ++i) {
            const std::size_t bc = (i >> (width - 1 - cp->control)) & 1U;
            const std::size_t bt = (i >> (width - 1 - cp->target)) & 1U;
            const std::size_t sub = 2 * bc + bt;
            out.at(i, i) = b4.at(sub, sub);
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
    DMat out = DMat::identity(std::size_t{1} << target);
    out = kron(out, from_unitary(u));
    out = kron(out, DMat::identity(std::size_t{1} << (width - 1 - target)));
    return out;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Haar-ish random 2x2 unitary: random ZYZ angles plus a random global phase.
inline Unitary2 random_unitary2(std::mt19937_64& rng) {
    const double alpha = uniform(rng, -6.0, 6.0);
    const double beta = uniform(rng, 0.0, std::acos(-1.0));
    const double delta = uniform(rng, -6.0, 6.0);
    const cplx phase = std::polar(1.0, uniform(rng, -3.0, 3.0));
    const Unitary2 za = u_phase_matrix(alpha);
    const Unitary2 yb = u_swap_matrix(beta);
    const Unitary2 zd = u_phase_matrix(delta);
    Unitary2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            cplx sum = 0.0;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    sum += za.at(r, i) * yb.at(i, j) * zd.at(j, c);
                }
            }
            out.at(r, c) = phase * sum;
        }
    }
    return out;
}

inline StateVector random_state(std::mt19937_64& rng, int width) {
    StateVector state;
    state.width = width;
    state.amplitudes.resize(std::size_t{1} << width);
    double norm = 0.0;
    for (auto& amp : state.amplitudes) {
        amp = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
        norm += std::norm(amp);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& amp : state.amplitudes) {
        amp *= scale;
    }
    return state;
}

}  // namespace acsim::test
