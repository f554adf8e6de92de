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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blochgas/continuum/distribution.hpp"
#include "blochgas/ensemble/gillespie.hpp"
#include "blochgas/meanfield/model.hpp"
#include "blochgas/qcore/bloch.hpp"

namespace blochgas::cli {

enum class OutputFormat { Csv, Json };

struct VerifySuiteExperiment {};

struct TrajectoryExperiment {
    meanfield::ModelSpec model;
    qcore::BlochVector u0;
    double t_end = 10.0;
    double dt = 1e-3;
    int samples = 201;
};

struct DephasingScanExperiment {
    double theta = 0.0;
    double gamma = 1.0;
    double dt = 1e-3;
    std::vector<double> u_z_values;
};

struct HemisphereScanExperiment {
    std::vector<qcore::BlochVector> u0_values;
    double t_end = 10.0;
    double dt = 1e-3;
    int samples = 201;
};

struct MasterCurveExperiment {
    std::vector<int> n_values;
    double gamma = 1.0;
    double t_end = 10.0;
    int samples = 201;
};

struct GillespieCurveExperiment {
    ensemble::McConfig mc;
    int m0 = 0;
};

struct ContinuumCurveExperiment {
    continuum::Distribution initial;
    bool mean_curve = true;     // otherwise a density table at a single time
    double t_end = 10.0;        // mean-curve horizon
    int samples = 201;          // mean-curve rows
    double table_time = 1.0;    // density-table evaluation time
};

struct FactorizationStudyExperiment {
    std::vector<int> n_values;
    qcore::BlochVector u0;
    double gamma = 1.0;
    double t = 1.0;
    double dt = 1e-2;
};

using ExperimentParams =
    std::variant<VerifySuiteExperiment, TrajectoryExperiment, DephasingScanExperiment,
                 HemisphereScanExperiment, MasterCurveExperiment, GillespieCurveExperiment,
                 ContinuumCurveExperiment, FactorizationStudyExperiment>;

struct ExperimentConfig {
    ExperimentParams params;
    std::string experiment_name;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
    std::string config_hash;  // fnv1a-64 of the raw config bytes
};

struct ValidationError {
    std::string path;
    std::string message;
};

struct ValidationResult {
    std::optional<ExperimentConfig> config;
    std::vector<ValidationError> errors;  // all violations, not just the first
    bool ok() const { return errors.empty() && config.has_value(); }
};

// Parses and fully validates a JSON experiment config. Unknown fields are
// rejected; every violation is reported with its field path.
ValidationResult validate(const std::string& config_text);

// Hex fnv1a-64 of a byte string, the config hash recorded in run sidecars.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace blochgas::cli
