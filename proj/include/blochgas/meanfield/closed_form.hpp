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

#include "blochgas/meanfield/model.hpp"

namespace blochgas::meanfield {

// Exact solutions of the three models, used as oracles for the integrator.

// Pair decay, longitudinal component: 1 - u_z(t) = (1/(1-u_z(0)) + gamma t/2)^-1.
// Returns u_z(t); identically 1 when u_z(0) = 1 (ground state is stationary).
double decay_uz_exact(double uz0, double gamma, double t);

// Pair decay, full state: transverse components follow the parabola
// 2 dlog u_{x,y} = dlog(1 - u_z), i.e. u_{x,y}(t) scales with
// sqrt((1-u_z(t))/(1-u_z(0))). The north pole maps to itself.
BlochVector decay_transverse_exact(const BlochVector& u0, double gamma, double t);

// Pair dephasing: u_z constant, transverse components damped by
// exp(-g(u_z) t) with g = gamma sin^2(theta) (1 + u_z sin(2 theta)).
BlochVector dephasing_exact(const BlochVector& u0, double theta, double gamma, double t);

// Singlet purification: u_x, u_y constant and
// u_z(t) = g tanh(g t/4 + atanh(u_z(0)/g)), g^2 = 1 - u_x^2 - u_y^2.
// Fixed points (g = 0 or |u_z(0)| = g) are returned unchanged without
// evaluating the inverse tanh.
BlochVector hemisphere_exact(const BlochVector& u0, double t);

// Dispatch to the model's exact solution.
BlochVector model_exact(const ModelSpec& model, const BlochVector& u0, double t);

}  // namespace blochgas::meanfield
