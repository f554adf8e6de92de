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

#include <Eigen/Dense>

#include "blochgas/qcore/density_matrix.hpp"
#include "blochgas/qcore/kraus_channel.hpp"

namespace blochgas::qcore {

using SuperMatrix = Eigen::Matrix<Complex, 16, 16>;

// Trace-annihilating generator acting on two-qubit (4x4) matrices, stored as
// a 16x16 matrix in the column-major vectorization basis. The collision rate
// gamma is carried separately and is NOT folded into the superoperator.
class PairGenerator {
public:
    PairGenerator(SuperMatrix action, double gamma);

    const SuperMatrix& action() const { return action_; }
    double gamma() const { return gamma_; }

    Eigen::Matrix4cd apply(const Eigen::Matrix4cd& sigma) const;

    // max over columns of |sum of trace-component rows|; zero iff
    // Tr(L sigma) = 0 for every sigma.
    double trace_annihilation_defect() const;

    // Whether conjugation by the pair swap leaves the action unchanged.
    bool swap_symmetric(double tol = 1e-10) const;

private:
    SuperMatrix action_;
    double gamma_;
};

// L = K - 1 for a pair channel (Kraus map minus identity).
PairGenerator generator_from_channel(const KrausChannel& chan, double gamma);

// GKSL form with a single jump operator: L(s) = A s A^dag - {A^dag A, s}/2.
PairGenerator generator_from_jump(const Eigen::Matrix4cd& jump, double gamma);

// Reduced state of the first qubit. Accepts a pair state (dim 4) or a
// 2^N-qubit state with keep_dim designating the retained leading subsystem.
DensityMatrix partial_trace_second(const DensityMatrix& sigma, Eigen::Index keep_dim = 2);

// gamma * Tr_2( L (rho x rho) ): the quadratic single-atom right-hand side.
// Traceless and Hermitian for any trace-annihilating generator.
Eigen::Matrix2cd meanfield_rhs(const PairGenerator& gen, const DensityMatrix& rho);

// Same right-hand side expressed as a Bloch-vector derivative.
BlochVector meanfield_rhs_bloch(const PairGenerator& gen, const BlochVector& u);

}  // namespace blochgas::qcore
