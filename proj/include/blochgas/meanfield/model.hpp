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

#include "blochgas/qcore/kraus_channel.hpp"
#include "blochgas/qcore/pair_generator.hpp"

namespace blochgas::meanfield {

using qcore::BlochVector;

// The three exactly solved pair-collision models.
//
//   PairDecay            both atoms of an excited pair drop to the ground
//                        state; jump operator a (x) a.
//   PairDephasing        pair dephasing through the Hermitian collision
//                        operator sqrt(2) K = cos(theta) 1 + sin(theta) sigma_z.
//   SingletPurification  singlet pairs decay to |00>; Kraus channel
//                        K1 = |g><s|, K2 = 1 - |s><s|. Rate fixed to 1; any
//                        other rate is a rescaling of time.
enum class ModelKind { PairDecay, PairDephasing, SingletPurification };

class ModelSpec {
public:
    static ModelSpec pair_decay(double gamma);
    static ModelSpec pair_dephasing(double theta, double gamma);
    static ModelSpec singlet_purification();

    ModelKind kind() const { return kind_; }
    double gamma() const { return gamma_; }
    double theta() const;

private:
    ModelSpec(ModelKind kind, double gamma, double theta)
        : kind_(kind), gamma_(gamma), theta_(theta) {}
    ModelKind kind_;
    double gamma_;
    double theta_;
};

// Closed-form Bloch vector field of the model. Agrees with the generic
// quadratic right-hand side built from the model's pair generator.
BlochVector model_rhs(const ModelSpec& model, const BlochVector& u);

// The model's pair generator for the generic qcore route.
qcore::PairGenerator model_pair_generator(const ModelSpec& model);

// K1 = |g><s|, K2 = 1 - |s><s| on pair space.
qcore::KrausChannel singlet_channel();

// State-dependent dephasing rate g(u_z) = gamma sin^2(theta) (1 + u_z sin(2 theta)).
double dephasing_rate(double theta, double gamma, double uz);

}  // namespace blochgas::meanfield
