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

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

namespace blochgas::continuum {

// Probability density for the excited fraction x in [0, 1], sampled on an
// ascending grid. Time is measured in units of 1/gamma.
struct DensityGrid {
    std::vector<double> x;
    std::vector<double> p;
    double time = 0.0;

    void validate() const;   // grid ascending in [0,1], p >= 0, mass = 1 +- 1e-6
    double mass() const;     // trapezoid quadrature
};

// Atomic measure: positions in [0, 1] with nonnegative weights summing to 1.
struct PointMasses {
    std::vector<double> x;
    std::vector<double> w;
    double time = 0.0;

    void validate() const;
};

using Distribution = std::variant<DensityGrid, PointMasses>;

// Characteristic curve of the conservation law: x(t) = x0 / (1 + x0 t).
double characteristic(double x0, double t);

// Push the distribution forward by dt along the characteristics. Densities
// are re-sampled on the advected grid (the support edge stays on-grid, so
// trapezoid mass is conserved); point masses move with unchanged weights.
DensityGrid evolve(const DensityGrid& d, double dt);
PointMasses evolve(const PointMasses& d, double dt);
Distribution evolve(const Distribution& d, double dt);

// Pointwise solution p(x, t) = (1 - x t)^{-2} p0(x / (1 - x t)) on a fixed
// location x, with p0 read from the t = 0 grid by linear interpolation.
// Returns 0 above the support hyperbola and guards the x t = 1 singularity.
double pushforward_value(const DensityGrid& initial, double x, double t);

// Linear interpolation on the grid; 0 outside the grid range.
double evaluate(const DensityGrid& d, double x);

// First moment: integral of x p(x) dx, or the weighted position sum.
double mean_excited(const Distribution& d);

// Uniform density p = 1 on [0, 1].
DensityGrid uniform_density(std::size_t points = 2048);

// Sample a density function on a uniform grid and normalize by its
// trapezoid mass.
DensityGrid density_from_function(const std::function<double(double)>& f,
                                  std::size_t points = 2048);

}  // namespace blochgas::continuum
