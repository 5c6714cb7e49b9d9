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
#include <vector>

namespace acsim {

/// Clearance floor below which a winding number is considered undefined.
inline constexpr double kEpsClearance = 1e-9;

/// Two closed-path vertices closer than this are treated as coincident; also
/// the tolerance for the explicit first-equals-last closure convention.
inline constexpr double kVertexTol = 1e-12;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// An ordered planar vertex chain. Closed polylines store the closure
/// explicitly: the first vertex is repeated as the last vertex (within
/// kVertexTol), so consecutive-pair iteration covers every segment.
struct Polyline {
    std::vector<Point2> vertices;
    bool closed = false;
};

struct WindingResult {
    long n = 0;          ///< signed winding number, counter-clockwise positive
    double clearance = 0.0;  ///< minimum distance from the path to the center
};

/// Throws DegeneratePath unless the polyline satisfies its invariants
/// (finite coordinates, >= 2 vertices, and for closed paths an explicit
/// first-equals-last closure with >= 3 distinct vertices).
void validate_path(const Polyline& path);

/// Signed winding number of a closed path around a center, computed by
/// counting signed crossings of a ray from the center. If a vertex lies
/// within kVertexTol of the ray, the ray is rotated by a fixed irrational
/// step until every vertex is clear of it, so the count is always an exact
/// integer. Throws PathTooClose when the clearance is <= kEpsClearance.
WindingResult winding_number(const Polyline& path, const Point2& center);

/// Independent cross-check for winding_number: accumulates the signed angle
/// subtended at the center by every segment and rounds the total to a
/// multiple of 2*pi. Throws NonIntegerAngleSum if the pre-rounding residual
/// exceeds 1e-6 * 2*pi.
long winding_number_oracle(const Polyline& path, const Point2& center);

/// Displaces every vertex by i.i.d. zero-mean Gaussian offsets of standard
/// deviation sigma per coordinate. Closed paths stay closed: the repeated
/// last vertex receives the same offset as the first. Deterministic for a
/// fixed seed; sigma == 0 returns the input unchanged.
Polyline perturb_path(const Polyline& path, double sigma, std::uint64_t seed);

/// Minimum Euclidean distance from a point to any segment of the path.
double min_distance(const Polyline& path, const Point2& point);

/// The point on the path closest to the query point.
Point2 closest_point(const Polyline& path, const Point2& point);

/// Signed enclosed area of a closed path by the shoelace formula,
/// counter-clockwise positive.
double enclosed_area(const Polyline& path);

/// Closed polyline tracing |turns| full revolutions of a circle,
/// counter-clockwise for turns > 0. samples_per_turn >= 8; the winding
/// number around the center equals turns by construction.
Polyline circle_path(const Point2& center, double radius, long turns, int samples_per_turn);

/// Translates every vertex by (dx, dy).
Polyline translate(const Polyline& path, double dx, double dy);

}  // namespace acsim
