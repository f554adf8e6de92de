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

#include "blochgas/qcore/kraus_channel.hpp"

#include <sstream>
#include <stdexcept>

namespace blochgas::qcore {

KrausChannel::KrausChannel(std::vector<Eigen::MatrixXcd> operators)
    : operators_(std::move(operators)) {
    if (operators_.empty()) {
        throw std::invalid_argument("KrausChannel: no operators");
    }
    const Eigen::Index d = operators_.front().rows();
    for (const auto& k : operators_) {
        if (k.rows() != d || k.cols() != d) {
            throw std::invalid_argument("KrausChannel: operators must be square, same dim");
        }
    }
    const double defect = completeness_defect();
    if (defect > kCompletenessTolerance) {
        std::ostringstream os;
        os << "KrausChannel: incomplete, sum K^dag K deviates from 1 by " << defect;
        throw std::invalid_argument(os.str());
    }
}

KrausChannel KrausChannel::identity(Eigen::Index dim) {
    return KrausChannel({Eigen::MatrixXcd::Identity(dim, dim)});
}

double KrausChannel::completeness_defect() const {
    const Eigen::Index d = dim();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& k : operators_) {
        sum += k.adjoint() * k;
    }
    return (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd KrausChannel::apply_raw(const Eigen::MatrixXcd& m) const {
    if (m.rows() != dim() || m.cols() != dim()) {
        throw std::invalid_argument("KrausChannel: dimension mismatch");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim(), dim());
    for (const auto& k : operators_) {
        out += k * m * k.adjoint();
    }
    return out;
}

DensityMatrix apply_channel(const KrausChannel& chan, const DensityMatrix& rho) {
    if (rho.dim() != chan.dim()) {
        throw std::invalid_argument("apply_channel: dimension mismatch");
    }
    return DensityMatrix::create(chan.apply_raw(rho.matrix()));
}

}  // namespace blochgas::qcore
