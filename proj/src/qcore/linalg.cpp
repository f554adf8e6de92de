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

#include "blochgas/qcore/linalg.hpp"

#include <stdexcept>

namespace blochgas::qcore {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& a, int n) {
    if (n < 1) {
        throw std::invalid_argument("kron_power: n must be >= 1");
    }
    Eigen::MatrixXcd out = a;
    for (int i = 1; i < n; ++i) {
        out = kron(out, a);
    }
    return out;
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& m) {
    return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, Eigen::Index rows) {
    if (v.size() % rows != 0) {
        throw std::invalid_argument("unvectorize: size not divisible by rows");
    }
    return Eigen::Map<const Eigen::MatrixXcd>(v.data(), rows, v.size() / rows);
}

Eigen::MatrixXcd ptrace_trailing(const Eigen::MatrixXcd& m, Eigen::Index keep_dim) {
    if (m.rows() != m.cols() || keep_dim < 1 || m.rows() % keep_dim != 0) {
        throw std::invalid_argument("ptrace_trailing: bad dimension");
    }
    const Eigen::Index env = m.rows() / keep_dim;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(keep_dim, keep_dim);
    for (Eigen::Index i = 0; i < keep_dim; ++i) {
        for (Eigen::Index j = 0; j < keep_dim; ++j) {
            Complex s = 0.0;
            for (Eigen::Index k = 0; k < env; ++k) {
                s += m(i * env + k, j * env + k);
            }
            out(i, j) = s;
        }
    }
    return out;
}

double hermiticity_defect(const Eigen::MatrixXcd& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double trace_norm(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
}

}  // namespace blochgas::qcore
