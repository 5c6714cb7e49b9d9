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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acsim {

/// Base class for all acsim errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Path has too few distinct vertices, is not properly closed, or contains
/// non-finite coordinates.
struct DegeneratePath : Error {
    using Error::Error;
};

/// Path passes within the clearance floor of the winding center; the winding
/// number is undefined.
struct PathTooClose : Error {
    using Error::Error;
};

/// The angle-sum winding check did not land on an integer multiple of 2*pi.
struct NonIntegerAngleSum : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

/// Requested winding magnitude exceeds the configured n_max.
struct WindingOutOfRange : Error {
    using Error::Error;
};

/// A gate angle is not an integer multiple of gamma0 and therefore has no
/// topological realization.
struct PhaseNotQuantized : Error {
    PhaseNotQuantized(std::size_t gate_index, long nearest_n, double residual,
                      const std::string& what)
        : Error(what), gate_index(gate_index), nearest_n(nearest_n), residual(residual) {}

    std::size_t gate_index;
    long nearest_n;
    double residual;
};

struct NotUnitary : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct WidthMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

/// Circuit or schedule file could not be parsed.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}

    std::size_t line;
};

}  // namespace acsim
