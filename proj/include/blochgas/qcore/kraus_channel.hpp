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

#include <vector>

#include <Eigen/Dense>

#include "blochgas/qcore/density_matrix.hpp"

namespace blochgas::qcore {

inline constexpr double kCompletenessTolerance = 1e-12;

// Completely positive trace-preserving map rho -> sum_j K_j rho K_j^dag.
// The constructor enforces completeness sum_j K_j^dag K_j = 1.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<Eigen::MatrixXcd> operators);

    static KrausChannel identity(Eigen::Index dim);

    Eigen::Index dim() const { return operators_.front().rows(); }
    const std::vector<Eigen::MatrixXcd>& operators() const { return operators_; }
    double completeness_defect() const;

    // Raw map on an arbitrary matrix of matching dimension.
    Eigen::MatrixXcd apply_raw(const Eigen::MatrixXcd& m) const;

private:
    std::vector<Eigen::MatrixXcd> operators_;
};

// Channel action on a state; preserves the trace to 1e-12.
DensityMatrix apply_channel(const KrausChannel& chan, const DensityMatrix& rho);

}  // namespace blochgas::qcore
