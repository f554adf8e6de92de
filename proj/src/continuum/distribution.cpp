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

#include "blochgas/continuum/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace blochgas::continuum {

namespace {

void require_unit_interval(const std::vector<double>& xs, const char* what) {
    double prev = -1.0;
    for (double x : xs) {
        if (x < 0.0 || x > 1.0) {
            std::ostringstream os;
            os << what << ": position " << x << " outside [0,1]";
            throw std::invalid_argument(os.str());
        }
        if (x <= prev) {
            throw std::invalid_argument(std::string(what) + ": positions must be ascending");
        }
        prev = x;
    }
}

}  // namespace

double DensityGrid::mass() const {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        acc += 0.5 * (x[i + 1] - x[i]) * (p[i] + p[i + 1]);
    }
    return acc;
}

void DensityGrid::validate() const {
    if (x.size() < 2 || x.size() != p.size()) {
        throw std::invalid_argument("DensityGrid: need matching grid and values, >= 2 points");
    }
    require_unit_interval(x, "DensityGrid");
    for (double v : p) {
        if (v < 0.0) {
            throw std::invalid_argument("DensityGrid: negative density value");
        }
    }
    const double m = mass();
    if (std::abs(m - 1.0) > 1e-6) {
        std::ostringstream os;
        os << "DensityGrid: quadrature mass " << m << " deviates from 1";
        throw std::invalid_argument(os.str());
    }
}

void PointMasses::validate() const {
    if (x.empty() || x.size() != w.size()) {
        throw std::invalid_argument("PointMasses: need matching positions and weights");
    }
    require_unit_interval(x, "PointMasses");
    double total = 0.0;
    for (double weight : w) {
        if (weight < 0.0) {
            throw std::invalid_argument("PointMasses: negative weight");
        }
        total += weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "PointMasses: weights sum to " << total;
        throw std::invalid_argument(os.str());
    }
}

double characteristic(double x0, double t) {
    if (x0 < 0.0 || x0 > 1.0) {
        throw std::invalid_argument("characteristic: x0 outside [0,1]");
    }
    if (t < 0.0) {
        throw std::invalid_argument("characteristic: t must be nonnegative");
    }
    return x0 / (1.0 + x0 * t);
}

DensityGrid evolve(const DensityGrid& d, double dt) {
    if (dt < 0.0) {
        throw std::invalid_argument("evolve: dt must be nonnegative");
    }
    DensityGrid out;
    out.time = d.time + dt;
    out.x.resize(d.x.size());
    out.p.resize(d.p.size());
    for (std::size_t i = 0; i < d.x.size(); ++i) {
        const double jac = 1.0 + d.x[i] * dt;  // dx0/dx along the characteristic
        out.x[i] = d.x[i] / jac;
        out.p[i] = d.p[i] * jac * jac;
    }
    return out;
}

PointMasses evolve(const PointMasses& d, double dt) {
    if (dt < 0.0) {
        throw std::invalid_argument("evolve: dt must be nonnegative");
    }
    PointMasses out;
    out.time = d.time + dt;
    out.w = d.w;
    out.x.resize(d.x.size());
    for (std::size_t i = 0; i < d.x.size(); ++i) {
        out.x[i] = characteristic(d.x[i], dt);
    }
    return out;
}

Distribution evolve(const Distribution& d, double dt) {
    return std::visit([dt](const auto& rep) -> Distribution { return evolve(rep, dt); }, d);
}

double evaluate(const DensityGrid& d, double x) {
    if (d.x.empty() || x < d.x.front() || x > d.x.back()) {
        return 0.0;
    }
    const auto it = std::upper_bound(d.x.begin(), d.x.end(), x);
    if (it == d.x.begin()) {
        return d.p.front();
    }
    const std::size_t hi = static_cast<std::size_t>(it - d.x.begin());
    if (hi == d.x.size()) {
        return d.p.back();
    }
    const std::size_t lo = hi - 1;
    const double f = (x - d.x[lo]) / (d.x[hi] - d.x[lo]);
    return (1.0 - f) * d.p[lo] + f * d.p[hi];
}

double pushforward_value(const DensityGrid& initial, double x, double t) {
    const double denom = 1.0 - x * t;
    if (denom <= 0.0) {
        return 0.0;  // above/at the x t = 1 hyperbola; unreachable for supported data
    }
    const double pullback = x / denom;
    if (pullback > 1.0) {
        return 0.0;  // above the support characteristic emanating from x0 = 1
    }
    return evaluate(initial, pullback) / (denom * denom);
}

double mean_excited(const Distribution& d) {
    if (const auto* grid = std::get_if<DensityGrid>(&d)) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < grid->x.size(); ++i) {
            acc += 0.5 * (grid->x[i + 1] - grid->x[i]) *
                   (grid->x[i] * grid->p[i] + grid->x[i + 1] * grid->p[i + 1]);
        }
        return acc;
    }
    const auto& masses = std::get<PointMasses>(d);
    double acc = 0.0;
    for (std::size_t i = 0; i < masses.x.size(); ++i) {
        acc += masses.x[i] * masses.w[i];
    }
    return acc;
}

DensityGrid uniform_density(std::size_t points) {
    if (points < 2) {
        throw std::invalid_argument("uniform_density: need at least two points");
    }
    DensityGrid d;
    d.x.resize(points);
    d.p.assign(points, 1.0);
    for (std::size_t i = 0; i < points; ++i) {
        d.x[i] = static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return d;
}

DensityGrid density_from_function(const std::function<double(double)>& f, std::size_t points) {
    DensityGrid d = uniform_density(points);
    for (std::size_t i = 0; i < points; ++i) {
        d.p[i] = std::max(0.0, f(d.x[i]));
    }
    const double m = d.mass();
    if (m <= 0.0) {
        throw std::invalid_argument("density_from_function: zero mass");
    }
    for (double& v : d.p) {
        v /= m;
    }
    return d;
}

}  // namespace blochgas::continuum
