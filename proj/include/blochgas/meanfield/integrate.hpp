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

#include <vector>

#include "blochgas/meanfield/model.hpp"

namespace blochgas::meanfield {

// Sampled Bloch trajectory; times strictly increasing, every state inside
// the ball to 1e-8.
struct Trajectory {
    std::vector<double> times;
    std::vector<BlochVector> states;

    std::size_t size() const { return times.size(); }
};

// Classical fixed-step 4th-order integration of model_rhs. All intermediate
// states are stored; the final step is truncated to land exactly on t_end.
// Throws if a state leaves the ball by more than 1e-6 (dt too large).
Trajectory integrate(const ModelSpec& model, const BlochVector& u0, double t_end, double dt);

// Half-step comparison: max component difference at t_end between step sizes
// dt and dt/2. Diagnostic for choosing dt; the integrator itself never adapts.
double richardson_error(const ModelSpec& model, const BlochVector& u0, double t_end, double dt);

}  // namespace blochgas::meanfield
