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

#include "blochgas/ensemble/nbody.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace blochgas::ensemble {

namespace {

using qcore::Complex;

struct SuperTriplet {
    int row;
    int col;
    Complex value;
};

// Insert a zero bit at the given position, shifting higher bits up.
unsigned insert_zero_bit(unsigned x, int pos) {
    const unsigned low_mask = (1u << pos) - 1u;
    return ((x & ~low_mask) << 1) | (x & low_mask);
}

// One pair term: indices and the sparse superoperator shared by all pairs.
struct PairPlan {
    std::vector<unsigned> base;   // rest index -> full index with pair bits cleared
    unsigned offset[4];           // pair bit pattern for local index 2*qj + qk
};

PairPlan make_plan(int n_atoms, int j, int k) {
    // Site 0 occupies the most significant bit, matching kron_power order.
    const int pos_j = n_atoms - 1 - j;
    const int pos_k = n_atoms - 1 - k;
    PairPlan plan;
    const unsigned rest = 1u << (n_atoms - 2);
    plan.base.resize(rest);
    for (unsigned r = 0; r < rest; ++r) {
        // pos_k < pos_j, so inserting at pos_k first keeps pos_j valid.
        plan.base[r] = insert_zero_bit(insert_zero_bit(r, pos_k), pos_j);
    }
    for (unsigned q = 0; q < 4; ++q) {
        plan.offset[q] = ((q >> 1) << pos_j) | ((q & 1u) << pos_k);
    }
    return plan;
}

// out += scale * sum_pairs L_jk rho, with L given as sparse superoperator
// triplets over the column-major pair vectorization.
void accumulate_rhs(const Eigen::MatrixXcd& rho, const std::vector<PairPlan>& plans,
                    const std::vector<SuperTriplet>& triplets, double scale,
                    Eigen::MatrixXcd& out) {
    const std::size_t rest = plans.front().base.size();
    Complex v[16];
    Complex w[16];
    for (const PairPlan& plan : plans) {
        for (std::size_t rr = 0; rr < rest; ++rr) {
            const unsigned row_base = plan.base[rr];
            for (std::size_t cc = 0; cc < rest; ++cc) {
                const unsigned col_base = plan.base[cc];
                for (int rp = 0; rp < 4; ++rp) {
                    for (int cp = 0; cp < 4; ++cp) {
                        v[rp + 4 * cp] =
                            rho(row_base + plan.offset[rp], col_base + plan.offset[cp]);
                    }
                }
                for (int i = 0; i < 16; ++i) {
                    w[i] = Complex(0.0, 0.0);
                }
                for (const SuperTriplet& trip : triplets) {
                    w[trip.row] += trip.value * v[trip.col];
                }
                for (int rp = 0; rp < 4; ++rp) {
                    for (int cp = 0; cp < 4; ++cp) {
                        out(row_base + plan.offset[rp], col_base + plan.offset[cp]) +=
                            scale * w[rp + 4 * cp];
                    }
                }
            }
        }
    }
}

}  // namespace

qcore::DensityMatrix exact_nbody_evolve(int n_atoms, const qcore::PairGenerator& gen,
                                        const qcore::DensityMatrix& rho0_single, double t,
                                        double dt) {
    if (n_atoms < 2 || n_atoms > 8) {
        throw std::invalid_argument("exact_nbody_evolve: N must be in 2..8");
    }
    if (rho0_single.dim() != 2) {
        throw std::invalid_argument("exact_nbody_evolve: rho0 must be a single-qubit state");
    }
    if (!gen.swap_symmetric()) {
        throw std::invalid_argument("exact_nbody_evolve: generator is not swap symmetric");
    }
    if (dt <= 0.0 || t < 0.0) {
        throw std::invalid_argument("exact_nbody_evolve: bad time arguments");
    }

    Eigen::MatrixXcd rho = qcore::kron_power(rho0_single.matrix(), n_atoms);
    if (t == 0.0) {
        return qcore::DensityMatrix::create(std::move(rho));
    }

    std::vector<SuperTriplet> triplets;
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            const Complex val = gen.action()(i, j);
            if (std::abs(val) > 1e-15) {
                triplets.push_back({i, j, val});
            }
        }
    }
    std::vector<PairPlan> plans;
    for (int j = 0; j < n_atoms; ++j) {
        for (int k = j + 1; k < n_atoms; ++k) {
            plans.push_back(make_plan(n_atoms, j, k));
        }
    }
    const double scale = gen.gamma() / n_atoms;
    const Eigen::Index dim = rho.rows();

    auto rhs = [&](const Eigen::MatrixXcd& state) {
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
        accumulate_rhs(state, plans, triplets, scale, out);
        return out;
    };

    double now = 0.0;
    while (now < t) {
        const double h = std::min(dt, t - now);
        const Eigen::MatrixXcd k1 = rhs(rho);
        const Eigen::MatrixXcd k2 = rhs(rho + 0.5 * h * k1);
        const Eigen::MatrixXcd k3 = rhs(rho + 0.5 * h * k2);
        const Eigen::MatrixXcd k4 = rhs(rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        now += h;
    }
    return qcore::DensityMatrix::create(std::move(rho));
}

double factorization_defect(const qcore::DensityMatrix& rho_full,
                            const qcore::DensityMatrix& rho_meanfield) {
    if (rho_meanfield.dim() != 2 || rho_full.dim() < 4) {
        throw std::invalid_argument("factorization_defect: bad dimensions");
    }
    const Eigen::MatrixXcd pair = qcore::ptrace_trailing(rho_full.matrix(), 4);
    Eigen::MatrixXcd diff =
        pair - qcore::kron(rho_meanfield.matrix(), rho_meanfield.matrix());
    // The difference is Hermitian up to roundoff; symmetrize before taking
    // eigenvalues.
    diff = 0.5 * (diff + diff.adjoint()).eval();
    return qcore::trace_norm(diff);
}

}  // namespace blochgas::ensemble
