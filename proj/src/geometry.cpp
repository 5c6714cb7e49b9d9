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

#include "acsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "acsim/errors.hpp"

namespace acsim {

namespace {

bool finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double dist(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool coincident(const Point2& a, const Point2& b) { return dist(a, b) <= kVertexTol; }

/// Closest point on segment [a, b] to p.
Point2 segment_closest(const Point2& a, const Point2& b, const Point2& p) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) {
        return a;
    }
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return {a.x + t * dx, a.y + t * dy};
}

}  // namespace

void validate_path(const Polyline& path) {
    const auto& v = path.vertices;
    if (v.size() < 2) {
        throw DegeneratePath("polyline needs at least 2 vertices");
    }
    for (const auto& p : v) {
        if (!finite(p)) {
            throw DegeneratePath("polyline vertex is not finite");
        }
    }
    if (path.closed) {
        if (!coincident(v.front(), v.back())) {
            throw DegeneratePath("closed polyline must repeat its first vertex as the last");
        }
        // Need >= 3 distinct vertices; one linear pass suffices.
        const Point2 a = v.front();
        const Point2* b = nullptr;
        bool three_distinct = false;
        for (const auto& p : v) {
            if (coincident(p, a)) {
                continue;
            }
            if (b == nullptr) {
                b = &p;
            } else if (!coincident(p, *b)) {
                three_distinct = true;
                break;
            }
        }
        if (!three_distinct) {
            throw DegeneratePath("closed polyline needs at least 3 distinct vertices");
        }
    }
}

WindingResult winding_number(const Polyline& path, const Point2& center) {
    validate_path(path);
    if (!path.closed) {
        throw DegeneratePath("winding number requires a closed polyline");
    }
    const double clearance = min_distance(path, center);
    if (clearance <= kEpsClearance) {
        throw PathTooClose("path clearance " + std::to_string(clearance) +
                           " is at or below the clearance floor; winding undefined");
    }

    // Pick a ray direction with no vertex within kVertexTol of the ray.
    // Hopping by an irrational fraction of a turn cannot cycle.
    constexpr double kBump = 0.61803398874989485;  // (sqrt(5)-1)/2 radians
    double phi = 0.0;
    double c = 1.0;
    double s = 0.0;
    for (int attempt = 0;; ++attempt) {
        bool clean = true;
        for (const auto& p : path.vertices) {
            const double dx = p.x - center.x;
            const double dy = p.y - center.y;
            const double along = dx * c + dy * s;     // coordinate along the ray
            const double across = -dx * s + dy * c;   // signed distance to ray line
            if (std::abs(across) < kVertexTol && along > -kVertexTol) {
                clean = false;
                break;
            }
        }
        if (clean) {
            break;
        }
        if (attempt >= 128) {
            throw InvalidParameter("could not find a ray direction clear of all vertices");
        }
        phi += kBump;
        c = std::cos(phi);
        s = std::sin(phi);
    }

    // Count signed axis crossings in the rotated frame. Crossings are only
    // counted on the positive side of the center; clearance > kEpsClearance
    // keeps the crossing abscissa away from zero.
    long n = 0;
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const Point2& p = path.vertices[i];
        const Point2& q = path.vertices[i + 1];
        const double pu = (p.x - center.x) * c + (p.y - center.y) * s;
        const double pw = -(p.x - center.x) * s + (p.y - center.y) * c;
        const double qu = (q.x - center.x) * c + (q.y - center.y) * s;
        const double qw = -(q.x - center.x) * s + (q.y - center.y) * c;
        const bool p_below = pw <= 0.0;
        const bool q_below = qw <= 0.0;
        if (p_below == q_below) {
            continue;
        }
        const double t = pw / (pw - qw);
        const double u_cross = pu + t * (qu - pu);
        if (u_cross > 0.0) {
            n += q_below ? -1 : +1;
        }
    }
    return {n, clearance};
}

long winding_number_oracle(const Polyline& path, const Point2& center) {
    validate_path(path);
    if (!path.closed) {
        throw DegeneratePath("winding number requires a closed polyline");
    }
    const double clearance = min_distance(path, center);
    if (clearance <= kEpsClearance) {
        throw PathTooClose("path clearance " + std::to_string(clearance) +
                           " is at or below the clearance floor; winding undefined");
    }

    // A straight segment seen from a point off the path subtends strictly
    // less than pi, so the branch-normalized angle increment is exact.
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double total = 0.0;
    double prev = std::atan2(path.vertices.front().y - center.y, path.vertices.front().x - center.x);
    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
        const double cur =
            std::atan2(path.vertices[i].y - center.y, path.vertices[i].x - center.x);
        double delta = cur - prev;
        if (delta > std::numbers::pi) {
            delta -= two_pi;
        } else if (delta <= -std::numbers::pi) {
            delta += two_pi;
        }
        total += delta;
        prev = cur;
    }
    const double turns = total / two_pi;
    const long n = std::lround(turns);
    const double residual = std::abs(total - static_cast<double>(n) * two_pi);
    if (residual > 1e-6 * two_pi) {
        throw NonIntegerAngleSum("angle sum residual " + std::to_string(residual) +
                                 " rad is not an integer multiple of 2*pi");
    }
    return n;
}

Polyline perturb_path(const Polyline& path, double sigma, std::uint64_t seed) {
    if (!std::isfinite(sigma) || sigma < 0.0) {
        throw InvalidParameter("sigma must be finite and >= 0");
    }
    validate_path(path);
    if (sigma == 0.0) {
        return path;
    }

    std::mt19937_64 engine(seed);
    std::normal_distribution<double> gauss(0.0, sigma);

    Polyline out = path;
    const std::size_t last = out.vertices.size() - 1;
    const std::size_t stop = path.closed ? last : last + 1;
    for (std::size_t i = 0; i < stop; ++i) {
        out.vertices[i].x += gauss(engine);
        out.vertices[i].y += gauss(engine);
    }
    if (path.closed) {
        out.vertices[last] = out.vertices.front();
    }
    return out;
}

double min_distance(const Polyline& path, const Point2& point) {
    validate_path(path);
    double best = dist(path.vertices.front(), point);
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const Point2 cp = segment_closest(path.vertices[i], path.vertices[i + 1], point);
        best = std::min(best, dist(cp, point));
    }
    return best;
}

Point2 closest_point(const Polyline& path, const Point2& point) {
    validate_path(path);
    Point2 best = path.vertices.front();
    double best_d = dist(best, point);
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const Point2 cp = segment_closest(path.vertices[i], path.vertices[i + 1], point);
        const double d = dist(cp, point);
        if (d < best_d) {
            best_d = d;
            best = cp;
        }
    }
    return best;
}

double enclosed_area(const Polyline& path) {
    validate_path(path);
    if (!path.closed) {
        throw DegeneratePath("enclosed area requires a closed polyline");
    }
    double twice_area = 0.0;
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const Point2& a = path.vertices[i];
        const Point2& b = path.vertices[i + 1];
        twice_area += a.x * b.y - b.x * a.y;
    }
    return 0.5 * twice_area;
}

Polyline circle_path(const Point2& center, double radius, long turns, int samples_per_turn) {
    if (!std::isfinite(radius) || radius <= 0.0) {
        throw InvalidParameter("circle radius must be finite and > 0");
    }
    if (turns == 0) {
        throw InvalidParameter("circle turns must be nonzero");
    }
    if (samples_per_turn < 8) {
        throw InvalidParameter("circle needs at least 8 samples per turn");
    }
    const long total = std::labs(turns) * samples_per_turn;
    const double step = (turns > 0 ? 1.0 : -1.0) * 2.0 * std::numbers::pi /
                        static_cast<double>(samples_per_turn);
    Polyline out;
    out.closed = true;
    out.vertices.reserve(static_cast<std::size_t>(total) + 1);
    for (long k = 0; k < total; ++k) {
        const double a = step * static_cast<double>(k % samples_per_turn);
        out.vertices.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    }
    out.vertices.push_back(out.vertices.front());
    return out;
}

Polyline translate(const Polyline& path, double dx, double dy) {
    Polyline out = path;
    for (auto& p : out.vertices) {
        p.x += dx;
        p.y += dy;
    }
    return out;
}

}  // namespace acsim
