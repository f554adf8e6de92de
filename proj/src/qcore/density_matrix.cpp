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

#include "blochgas/qcore/density_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "blochgas/qcore/operators.hpp"

namespace blochgas::qcore {

DensityMatrix DensityMatrix::create(Eigen::MatrixXcd m) {
    if (m.rows() != m.cols() || m.rows() < 2) {
        throw std::invalid_argument("DensityMatrix: matrix must be square, dim >= 2");
    }
    const double herm = hermiticity_defect(m);
    if (herm > kHermitianTolerance) {
        std::ostringstream os;
        os << "DensityMatrix: not Hermitian (defect " << herm << ")";
        throw std::invalid_argument(os.str());
    }
    const double trace_err = std::abs(m.trace() - Complex(1.0));
    if (trace_err > kTraceTolerance) {
        std::ostringstream os;
        os << "DensityMatrix: trace differs from 1 by " << trace_err;
        throw std::invalid_argument(os.str());
    }
    const double min_eig = min_eigenvalue(m);
    if (min_eig < kPositivityTolerance) {
        std::ostringstream os;
        os << "DensityMatrix: smallest eigenvalue " << min_eig;
        throw std::invalid_argument(os.str());
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix bloch_to_density(const BlochVector& u) {
    if (!u.in_ball()) {
        std::ostringstream os;
        os << "bloch_to_density: |u| = " << u.norm() << " exceeds 1";
        throw std::invalid_argument(os.str());
    }
    Eigen::Matrix2cd m = 0.5 * (Eigen::Matrix2cd::Identity() + u.x * pauli_x() +
                                u.y * pauli_y() + u.z * pauli_z());
    return DensityMatrix::create(m);
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("density_to_bloch: dim must be 2");
    }
    return bloch_components(rho.matrix());
}

BlochVector bloch_components(const Eigen::Matrix2cd& m) {
    return {(m * pauli_x()).trace().real(), (m * pauli_y()).trace().real(),
            (m * pauli_z()).trace().real()};
}

}  // namespace blochgas::qcore
