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

#include <random>
#include <vector>

#include "blochgas/qcore/bloch.hpp"
#include "blochgas/qcore/density_matrix.hpp"

namespace blochgas::test {

// Deterministic uniform sampling of the solid Bloch ball by rejection from
// the cube. Same seed, same states, every run.
class BallSampler {
public:
    explicit BallSampler(std::uint64_t seed = 0x42cafeull) : rng_(seed), dist_(-1.0, 1.0) {}

    qcore::BlochVector next() {
        while (true) {
            qcore::BlochVector u{dist_(rng_), dist_(rng_), dist_(rng_)};
            if (u.norm_squared() <= 1.0) {
                return u;
            }
        }
    }

    std::vector<qcore::BlochVector> take(std::size_t n) {
        std::vector<qcore::BlochVector> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(next());
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> dist_;
};

// Random density matrix of the given dimension: normalized M M^dag + eps.
inline Eigen::MatrixXcd random_density(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> n01(0.0, 1.0);
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = qcore::Complex(n01(rng), n01(rng));
        }
    }
    Eigen::MatrixXcd rho = m * m.adjoint();
    rho /= rho.trace();
    return rho;
}

}  // namespace blochgas::test
