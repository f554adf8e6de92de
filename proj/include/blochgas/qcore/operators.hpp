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

#include "blochgas/qcore/linalg.hpp"

// Fixed single-qubit and pair operators. Basis order is |0>, |1> with |0>
// the ground state (Bloch north pole); pair basis |q1 q2> is indexed
// 2*q1 + q2, matching kron() with the first factor most significant.
namespace blochgas::qcore {

inline Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

inline Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

inline Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

// a = |0><1|, lowering the excited state to the ground state.
inline Eigen::Matrix2cd annihilation() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 1) = 1.0;
    return m;
}

inline Eigen::Matrix2cd ground_projector() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = 1.0;
    return m;
}

inline Eigen::Matrix2cd excited_projector() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(1, 1) = 1.0;
    return m;
}

// |g> = |00>
inline Eigen::Vector4cd pair_ground_ket() {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    v(0) = 1.0;
    return v;
}

// |s> = (|01> - |10|)/sqrt(2)
inline Eigen::Vector4cd singlet_ket() {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    v(1) = 1.0 / std::sqrt(2.0);
    v(2) = -1.0 / std::sqrt(2.0);
    return v;
}

inline Eigen::Matrix4cd pair_swap() {
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Identity();
    s(1, 1) = 0.0;
    s(2, 2) = 0.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    return s;
}

}  // namespace blochgas::qcore
