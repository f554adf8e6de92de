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

#include "blochgas/meanfield/integrate.hpp"

namespace blochgas::meanfield {

enum class Axis { X, Y, Z };

struct RateReport {
    double fitted_rate = 0.0;
    double predicted_rate = 0.0;
    // Max absolute deviation of the log-linear fit; large values flag
    // non-exponential (e.g. power-law) behaviour.
    double residual = 0.0;
};

// Least-squares slope of log|component - asymptote| against t. The fit
// window is the first 5/predicted_rate time units (the whole trajectory when
// predicted_rate is 0 or the window exceeds it). Throws if the signal hits
// zero or changes sign inside the window.
RateReport fit_exponential_rate(const Trajectory& traj, Axis component,
                                double asymptote = 0.0, double predicted_rate = 0.0);

// Integrates one dephasing initial condition and fits the transverse decay.
// The initial state lies on the sphere at height uz; u_z = +-1 is pulled
// inward by 1e-8 so a transverse signal exists to fit.
RateReport dephasing_scan_point(double theta, double gamma, double uz, double dt);

}  // namespace blochgas::meanfield
