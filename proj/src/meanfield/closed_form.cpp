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

#include "blochgas/meanfield/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace blochgas::meanfield {

double decay_uz_exact(double uz0, double gamma, double t) {
    if (uz0 > 1.0) {
        throw std::invalid_argument("decay_uz_exact: u_z(0) must not exceed 1");
    }
    if (uz0 == 1.0) {
        return 1.0;
    }
    return 1.0 - 1.0 / (1.0 / (1.0 - uz0) + 0.5 * gamma * t);
}

BlochVector decay_transverse_exact(const BlochVector& u0, double gamma, double t) {
    if (u0.z == 1.0) {
        return u0;
    }
    const double uz = decay_uz_exact(u0.z, gamma, t);
    const double scale = std::sqrt((1.0 - uz) / (1.0 - u0.z));
    return {u0.x * scale, u0.y * scale, uz};
}

BlochVector dephasing_exact(const BlochVector& u0, double theta, double gamma, double t) {
    const double damp = std::exp(-dephasing_rate(theta, gamma, u0.z) * t);
    return {u0.x * damp, u0.y * damp, u0.z};
}

BlochVector hemisphere_exact(const BlochVector& u0, double t) {
    const double g_sq = 1.0 - u0.x * u0.x - u0.y * u0.y;
    const double g = std::sqrt(std::max(g_sq, 0.0));
    if (g == 0.0 || std::abs(u0.z) >= g) {
        return u0;
    }
    const double uz = g * std::tanh(0.25 * g * t + std::atanh(u0.z / g));
    return {u0.x, u0.y, uz};
}

BlochVector model_exact(const ModelSpec& model, const BlochVector& u0, double t) {
    switch (model.kind()) {
        case ModelKind::PairDecay:
            return decay_transverse_exact(u0, model.gamma(), t);
        case ModelKind::PairDephasing:
            return dephasing_exact(u0, model.theta(), model.gamma(), t);
        case ModelKind::SingletPurification:
            return hemisphere_exact(u0, t);
    }
    throw std::logic_error("model_exact: unknown model kind");
}

}  // namespace blochgas::meanfield
