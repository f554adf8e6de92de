// Copyright 2026 The Blochgas Authors
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

#include <algorithm>
#include <cmath>

namespace blochgas::qcore {

// Slack allowed on |u| <= 1 before a state is rejected as unphysical.
inline constexpr double kBallTolerance = 1e-10;

// Bloch vector u of a qubit state rho = (1 + u.sigma)/2. |u| = 1 on the
// pure-state sphere, |u| < 1 for mixed states.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm_squared() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_squared()); }
    bool in_ball(double tol = kBallTolerance) const { return norm() <= 1.0 + tol; }
};

inline BlochVector operator+(const BlochVector& a, const BlochVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline BlochVector operator-(const BlochVector& a, const BlochVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline BlochVector operator*(double s, const BlochVector& u) {
    return {s * u.x, s * u.y, s * u.z};
}

inline double max_abs_diff(const BlochVector& a, const BlochVector& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace blochgas::qcore
