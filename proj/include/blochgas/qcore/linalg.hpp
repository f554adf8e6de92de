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

#include <complex>

#include <Eigen/Dense>

namespace blochgas::qcore {

using Complex = std::complex<double>;

// Kronecker product, first factor most significant: kron(A,B) acts on the
// composite space with A on subsystem 1 and B on subsystem 2.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// n-fold Kronecker power.
Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& a, int n);

// Column-major vectorization: vec(M)_{i + rows*j} = M(i,j). This is the
// operator-basis convention for all superoperator matrices in this library,
// so vec(A X B) = (B^T (x) A) vec(X).
Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, Eigen::Index rows);

// Trace over the trailing subsystem: for m on a space of dimension
// keep_dim * env_dim, returns the keep_dim x keep_dim reduced matrix.
Eigen::MatrixXcd ptrace_trailing(const Eigen::MatrixXcd& m, Eigen::Index keep_dim);

// max_ij |m_ij - conj(m_ji)|
double hermiticity_defect(const Eigen::MatrixXcd& m);

// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Eigen::MatrixXcd& m);

// Sum of absolute eigenvalues of a Hermitian matrix (Schatten 1-norm).
double trace_norm(const Eigen::MatrixXcd& m);

}  // namespace blochgas::qcore
