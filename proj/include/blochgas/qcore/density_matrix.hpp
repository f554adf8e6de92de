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

#include "blochgas/qcore/bloch.hpp"
#include "blochgas/qcore/linalg.hpp"

namespace blochgas::qcore {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
// Eigen solvers report tiny negative eigenvalues for boundary states.
inline constexpr double kPositivityTolerance = -1e-10;

// Hermitian, unit-trace, positive-semidefinite matrix. Construction goes
// through create(), which enforces the three invariants.
class DensityMatrix {
public:
    static DensityMatrix create(Eigen::MatrixXcd m);

    Eigen::Index dim() const { return mat_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return mat_; }

private:
    explicit DensityMatrix(Eigen::MatrixXcd m) : mat_(std::move(m)) {}
    Eigen::MatrixXcd mat_;
};

// rho = (1 + u.sigma)/2 in the standard Pauli basis. Rejects |u| > 1 + 1e-10.
DensityMatrix bloch_to_density(const BlochVector& u);

// u_k = Tr(rho sigma_k). Requires dim = 2.
BlochVector density_to_bloch(const DensityMatrix& rho);

// Bloch components of an arbitrary (not necessarily unit-trace) Hermitian
// 2x2 matrix; used to read derivatives off master-equation right-hand sides.
BlochVector bloch_components(const Eigen::Matrix2cd& m);

}  // namespace blochgas::qcore
