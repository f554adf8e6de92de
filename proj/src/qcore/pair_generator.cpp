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

#include "blochgas/qcore/pair_generator.hpp"

#include <sstream>
#include <stdexcept>

#include "blochgas/qcore/operators.hpp"

namespace blochgas::qcore {

namespace {

// vec(A X B) = (B^T (x) A) vec(X) in the column-major convention.
SuperMatrix sandwich_superop(const Eigen::Matrix4cd& left, const Eigen::Matrix4cd& right) {
    return kron(right.transpose(), left);
}

}  // namespace

PairGenerator::PairGenerator(SuperMatrix action, double gamma)
    : action_(std::move(action)), gamma_(gamma) {
    const double defect = trace_annihilation_defect();
    if (defect > 1e-12) {
        std::ostringstream os;
        os << "PairGenerator: not trace-annihilating (defect " << defect << ")";
        throw std::invalid_argument(os.str());
    }
}

Eigen::Matrix4cd PairGenerator::apply(const Eigen::Matrix4cd& sigma) const {
    using Vector16 = Eigen::Matrix<Complex, 16, 1>;
    Vector16 v = Eigen::Map<const Vector16>(sigma.data());
    Vector16 w = action_ * v;
    return Eigen::Map<const Eigen::Matrix4cd>(w.data());
}

double PairGenerator::trace_annihilation_defect() const {
    // Rows 0, 5, 10, 15 carry the diagonal of the output matrix; their column
    // sums are the trace of L applied to each basis element.
    double worst = 0.0;
    for (int j = 0; j < 16; ++j) {
        Complex s = 0.0;
        for (int i = 0; i < 4; ++i) {
            s += action_(5 * i, j);
        }
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

bool PairGenerator::swap_symmetric(double tol) const {
    const Eigen::Matrix4cd s = pair_swap();
    const SuperMatrix swap_conj = sandwich_superop(s, s);
    return (swap_conj * action_ * swap_conj - action_).cwiseAbs().maxCoeff() <= tol;
}

PairGenerator generator_from_channel(const KrausChannel& chan, double gamma) {
    if (chan.dim() != 4) {
        throw std::invalid_argument("generator_from_channel: channel must act on pair space");
    }
    SuperMatrix action = SuperMatrix::Zero();
    for (const auto& k : chan.operators()) {
        const Eigen::Matrix4cd k4 = k;
        action += sandwich_superop(k4, k4.adjoint());
    }
    action -= SuperMatrix::Identity();
    return PairGenerator(action, gamma);
}

PairGenerator generator_from_jump(const Eigen::Matrix4cd& jump, double gamma) {
    const Eigen::Matrix4cd jj = jump.adjoint() * jump;
    const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
    SuperMatrix action = sandwich_superop(jump, jump.adjoint());
    action -= 0.5 * sandwich_superop(jj, id);
    action -= 0.5 * sandwich_superop(id, jj);
    return PairGenerator(action, gamma);
}

DensityMatrix partial_trace_second(const DensityMatrix& sigma, Eigen::Index keep_dim) {
    if (sigma.dim() % keep_dim != 0 || sigma.dim() <= keep_dim) {
        throw std::invalid_argument("partial_trace_second: bad dimension");
    }
    return DensityMatrix::create(ptrace_trailing(sigma.matrix(), keep_dim));
}

Eigen::Matrix2cd meanfield_rhs(const PairGenerator& gen, const DensityMatrix& rho) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("meanfield_rhs: rho must be a qubit state");
    }
    const Eigen::Matrix4cd pair = kron(rho.matrix(), rho.matrix());
    const Eigen::Matrix4cd moved = gen.apply(pair);
    return gen.gamma() * ptrace_trailing(moved, 2);
}

BlochVector meanfield_rhs_bloch(const PairGenerator& gen, const BlochVector& u) {
    return bloch_components(meanfield_rhs(gen, bloch_to_density(u)));
}

}  // namespace blochgas::qcore
