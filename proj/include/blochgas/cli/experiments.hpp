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

#include "blochgas/cli/config.hpp"
#include "blochgas/cli/csv.hpp"

namespace blochgas::cli {

inline constexpr const char* kToolName = "blochgas";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunOverrides {
    std::optional<std::string> output_path;
    std::optional<OutputFormat> format;
    std::optional<std::uint64_t> seed;  // Monte Carlo experiments only
    int threads = 1;
};

// Executes a validated experiment, writing the table and its JSON sidecar.
// Returns 0 on success, 2 on runtime failure (including failed verify checks).
int run_experiment(const ExperimentConfig& config, const RunOverrides& overrides = {});

// Table builders behind run_experiment, exposed for tests and verify checks.
Table trajectory_table(const TrajectoryExperiment& exp);
Table dephasing_scan_table(const DephasingScanExperiment& exp);
Table hemisphere_scan_table(const HemisphereScanExperiment& exp);
// divergence_times, when given, receives for each N the first sampled time at
// which the finite-N curve departs from the continuum by more than 0.01
// (-1 when it never does within the horizon).
Table master_curve_table(const MasterCurveExperiment& exp,
                         std::vector<double>* divergence_times = nullptr);
Table gillespie_table(const GillespieCurveExperiment& exp, int threads = 1);
Table continuum_table(const ContinuumCurveExperiment& exp);
Table factorization_table(const FactorizationStudyExperiment& exp);

// Applies the BLOCHGAS_OUT_DIR override to relative output paths.
std::string resolve_output_path(const std::string& path);

}  // namespace blochgas::cli
