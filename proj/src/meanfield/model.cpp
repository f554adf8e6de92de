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

#include "blochgas/meanfield/model.hpp"

#include <cmath>
#include <stdexcept>

#include "blochgas/qcore/operators.hpp"

namespace blochgas::meanfield {

ModelSpec ModelSpec::pair_decay(double gamma) {
    if (gamma <= 0.0) {
        throw std::invalid_argument("ModelSpec: gamma must be positive");
    }
    return ModelSpec(ModelKind::PairDecay, gamma, 0.0);
}

ModelSpec ModelSpec::pair_dephasing(double theta, double gamma) {
    if (gamma <= 0.0) {
        throw std::invalid_argument("ModelSpec: gamma must be positive");
    }
    if (std::abs(std::sin(theta)) < 1e-12) {
        throw std::invalid_argument("ModelSpec: sin(theta) = 0 is the trivial dephasing case");
    }
    return ModelSpec(ModelKind::PairDephasing, gamma, theta);
}

ModelSpec ModelSpec::singlet_purification() {
    return ModelSpec(ModelKind::SingletPurification, 1.0, 0.0);
}

double ModelSpec::theta() const {
    if (kind_ != ModelKind::PairDephasing) {
        throw std::logic_error("ModelSpec: theta only defined for PairDephasing");
    }
    return theta_;
}

double dephasing_rate(double theta, double gamma, double uz) {
    const double s = std::sin(theta);
    return gamma * s * s * (1.0 + uz * std::sin(2.0 * theta));
}

BlochVector model_rhs(const ModelSpec& model, const BlochVector& u) {
    switch (model.kind()) {
        case ModelKind::PairDecay: {
            const double eff = model.gamma() * (1.0 - u.z) / 2.0;
            return {-0.5 * eff * u.x, -0.5 * eff * u.y, -eff * (u.z - 1.0)};
        }
        case ModelKind::PairDephasing: {
            const double g = dephasing_rate(model.theta(), model.gamma(), u.z);
            return {-g * u.x, -g * u.y, 0.0};
        }
        case ModelKind::SingletPurification:
            return {0.0, 0.0, 0.25 * (1.0 - u.norm_squared())};
    }
    throw std::logic_error("model_rhs: unknown model kind");
}

qcore::KrausChannel singlet_channel() {
    const Eigen::Vector4cd g = qcore::pair_ground_ket();
    const Eigen::Vector4cd s = qcore::singlet_ket();
    Eigen::MatrixXcd k1 = g * s.adjoint();
    Eigen::MatrixXcd k2 = Eigen::Matrix4cd::Identity() - s * s.adjoint();
    return qcore::KrausChannel({k1, k2});
}

qcore::PairGenerator model_pair_generator(const ModelSpec& model) {
    switch (model.kind()) {
        case ModelKind::PairDecay: {
            const Eigen::Matrix4cd jump =
                qcore::kron(qcore::annihilation(), qcore::annihilation());
            return qcore::generator_from_jump(jump, model.gamma());
        }
        case ModelKind::PairDephasing: {
            // sqrt(2) K = cos(theta) 1 + sin(theta) sigma_z. The dissipative
            // double commutator -[K x K, [K x K, .]] is the GKSL form with
            // jump operator sqrt(2) K x K.
            const Eigen::Matrix2cd k =
                (std::cos(model.theta()) * Eigen::Matrix2cd::Identity() +
                 std::sin(model.theta()) * qcore::pauli_z()) /
                std::sqrt(2.0);
            const Eigen::Matrix4cd jump = std::sqrt(2.0) * qcore::kron(k, k);
            return qcore::generator_from_jump(jump, model.gamma());
        }
        case ModelKind::SingletPurification:
            return qcore::generator_from_channel(singlet_channel(), 1.0);
    }
    throw std::logic_error("model_pair_generator: unknown model kind");
}

}  // namespace blochgas::meanfield
