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

namespace blochgas::ensemble {

// Probability vector over the symmetric mixtures R_n (2n excited atoms out
// of N); entry n is the weight of R_n, n = 0 .. N/2.
struct EnsembleState {
    int n_atoms = 0;  // even
    Eigen::VectorXd probs;

    static EnsembleState delta(int n_atoms, int n_excited_pairs);
    void validate() const;  // throws when invariants are violated
};

// Upper bidiagonal generator of the pair-decay master equation
// dp/dt = -G p / N, with G_nn = -G_{n-1,n} = gamma n (2n - 1). Columns sum
// to zero; the decay rates are the diagonal entries over N.
struct DecayGenerator {
    int n_atoms = 0;
    double gamma = 0.0;
    Eigen::MatrixXd matrix;

    int levels() const { return n_atoms / 2 + 1; }
    double rate(int n) const { return gamma * n * (2.0 * n - 1.0); }
};

DecayGenerator build_generator(int n_atoms, double gamma);

// Propagates p(t) = exp(-G t / N) p(0) exactly through the eigenvector
// expansion of the bidiagonal generator (all rates distinct). When the
// expansion coefficients indicate catastrophic cancellation the propagator
// falls back to dense fixed-step integration and flags it. Single-threaded:
// the fallback keeps an integration cursor that advances with ascending
// query times.
class MasterPropagator {
public:
    MasterPropagator(const DecayGenerator& gen, EnsembleState p0);

    EnsembleState at(double t) const;
    bool used_fallback() const { return use_fallback_; }
    double condition_estimate() const { return condition_; }

private:
    DecayGenerator gen_;
    EnsembleState p0_;
    Eigen::MatrixXd expansion_;  // A(n,m): p_n(t) = sum_m A(n,m) exp(-d_m t / N)
    double condition_ = 0.0;
    bool use_fallback_ = false;
    mutable double cursor_time_ = 0.0;
    mutable Eigen::VectorXd cursor_;
};

EnsembleState evolve_master(const DecayGenerator& gen, const EnsembleState& p0, double t,
                            bool* used_fallback = nullptr);

// Dense fixed-step integration of dp/dt = -G p / N; the fallback route of
// MasterPropagator, exposed so both routes can be cross-checked.
EnsembleState evolve_master_dense(const DecayGenerator& gen, const EnsembleState& p0,
                                  double t);

// sum_n (2n/N) p_n, the expected fraction of still-excited atoms.
double excited_fraction(const EnsembleState& p);

}  // namespace blochgas::ensemble
