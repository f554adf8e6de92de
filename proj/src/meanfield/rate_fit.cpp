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

#include "blochgas/meanfield/rate_fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace blochgas::meanfield {

namespace {

double component_of(const BlochVector& u, Axis axis) {
    switch (axis) {
        case Axis::X: return u.x;
        case Axis::Y: return u.y;
        case Axis::Z: return u.z;
    }
    throw std::logic_error("unknown axis");
}

}  // namespace

RateReport fit_exponential_rate(const Trajectory& traj, Axis component,
                                double asymptote, double predicted_rate) {
    if (traj.size() < 2) {
        throw std::invalid_argument("fit_exponential_rate: need at least two samples");
    }
    double window = traj.times.back();
    if (predicted_rate > 0.0) {
        window = std::min(window, 5.0 / predicted_rate);
    }

    std::vector<double> ts;
    std::vector<double> logs;
    int sign = 0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (traj.times[i] > window) {
            break;
        }
        const double s = component_of(traj.states[i], component) - asymptote;
        if (s == 0.0) {
            throw std::domain_error("fit_exponential_rate: signal hits zero in the fit window");
        }
        const int si = s > 0.0 ? 1 : -1;
        if (sign == 0) {
            sign = si;
        } else if (si != sign) {
            throw std::domain_error("fit_exponential_rate: signal changes sign in the fit window");
        }
        ts.push_back(traj.times[i]);
        logs.push_back(std::log(std::abs(s)));
    }
    if (ts.size() < 2) {
        throw std::domain_error("fit_exponential_rate: fewer than two samples in the fit window");
    }

    const double n = static_cast<double>(ts.size());
    double t_mean = 0.0, l_mean = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        t_mean += ts[i];
        l_mean += logs[i];
    }
    t_mean /= n;
    l_mean /= n;
    double cov = 0.0, var = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        cov += (ts[i] - t_mean) * (logs[i] - l_mean);
        var += (ts[i] - t_mean) * (ts[i] - t_mean);
    }
    const double slope = cov / var;
    const double intercept = l_mean - slope * t_mean;

    double residual = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        residual = std::max(residual, std::abs(logs[i] - (intercept + slope * ts[i])));
    }

    RateReport report;
    report.fitted_rate = -slope;
    report.predicted_rate = predicted_rate;
    report.residual = residual;
    return report;
}

RateReport dephasing_scan_point(double theta, double gamma, double uz, double dt) {
    const double uz_inner = std::clamp(uz, -1.0 + 1e-8, 1.0 - 1e-8);
    const BlochVector u0{std::sqrt(std::max(0.0, 1.0 - uz_inner * uz_inner)), 0.0, uz_inner};
    const double predicted = dephasing_rate(theta, gamma, uz_inner);
    const double t_end = std::min(20.0 / gamma, 5.0 / std::max(predicted, 1e-12));
    const Trajectory traj =
        integrate(ModelSpec::pair_dephasing(theta, gamma), u0, t_end, dt);
    return fit_exponential_rate(traj, Axis::X, 0.0, predicted);
}

}  // namespace blochgas::meanfield
