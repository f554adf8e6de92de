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

#include "blochgas/qcore/density_matrix.hpp"
#include "blochgas/qcore/pair_generator.hpp"

namespace blochgas::ensemble {

// Dense fixed-step integration of the full N-body equation
//   d rho / dt = (gamma/N) sum_{j<k} L_jk rho
// from the product initial state rho0^(x N). The pair generator must be
// symmetric under swapping the pair; N is capped at 8 by memory.
qcore::DensityMatrix exact_nbody_evolve(int n_atoms, const qcore::PairGenerator& gen,
                                        const qcore::DensityMatrix& rho0_single, double t,
                                        double dt);

// Trace-norm distance || Tr_{3..N} rho_N  -  rho_mf (x) rho_mf ||_1 between
// the reduced pair state and the factorized mean-field state.
double factorization_defect(const qcore::DensityMatrix& rho_full,
                            const qcore::DensityMatrix& rho_meanfield);

}  // namespace blochgas::ensemble
