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

#include "blochgas/meanfield/integrate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace blochgas::meanfield {

namespace {

constexpr double kBallExitTolerance = 1e-6;

BlochVector rk4_step(const ModelSpec& model, const BlochVector& u, double h) {
    const BlochVector k1 = model_rhs(model, u);
    const BlochVector k2 = model_rhs(model, u + (0.5 * h) * k1);
    const BlochVector k3 = model_rhs(model, u + (0.5 * h) * k2);
    const BlochVector k4 = model_rhs(model, u + h * k3);
    return u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Trajectory integrate(const ModelSpec& model, const BlochVector& u0, double t_end, double dt) {
    if (dt <= 0.0) {
        throw std::invalid_argument("integrate: dt must be positive");
    }
    if (t_end < 0.0) {
        throw std::invalid_argument("integrate: t_end must be nonnegative");
    }
    if (!u0.in_ball()) {
        throw std::invalid_argument("integrate: initial state outside the Bloch ball");
    }

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.states.push_back(u0);
    if (t_end == 0.0) {
        return traj;
    }

    BlochVector u = u0;
    // Times are computed as i*dt rather than accumulated, so repeated runs
    // with the same dt produce identical grids.
    for (std::size_t i = 1;; ++i) {
        const double t_next = static_cast<double>(i) * dt;
        double t;
        double h;
        bool last = false;
        if (t_next >= t_end - 1e-12 * t_end) {
            t = t_end;
            h = t_end - traj.times.back();
            last = true;
        } else {
            t = t_next;
            h = dt;
        }
        u = rk4_step(model, u, h);
        if (u.norm() > 1.0 + kBallExitTolerance) {
            std::ostringstream os;
            os << "integrate: state left the Bloch ball at t = " << t
               << " (|u| = " << u.norm() << "); dt = " << dt << " is too large";
            throw std::runtime_error(os.str());
        }
        traj.times.push_back(t);
        traj.states.push_back(u);
        if (last) {
            break;
        }
    }
    return traj;
}

double richardson_error(const ModelSpec& model, const BlochVector& u0, double t_end, double dt) {
    const Trajectory coarse = integrate(model, u0, t_end, dt);
    const Trajectory fine = integrate(model, u0, t_end, 0.5 * dt);
    return qcore::max_abs_diff(coarse.states.back(), fine.states.back());
}

}  // namespace blochgas::meanfield
