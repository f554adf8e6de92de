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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "blochgas/cli/config.hpp"
#include "blochgas/cli/experiments.hpp"
#include "blochgas/verify/checks.hpp"

namespace {

using blochgas::cli::ExperimentConfig;
using blochgas::cli::OutputFormat;
using blochgas::cli::RunOverrides;
using blochgas::cli::ValidationResult;

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

void print_errors(const std::vector<blochgas::cli::ValidationError>& errors) {
    nlohmann::json report;
    report["errors"] = nlohmann::json::array();
    for (const auto& e : errors) {
        report["errors"].push_back({{"path", e.path}, {"message", e.message}});
    }
    std::cerr << report.dump(2) << "\n";
}

int run_from_config(const std::string& config_path, const std::string& expected_kind,
                    const RunOverrides& overrides) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        print_errors({{"$", "cannot read config file " + config_path}});
        return kExitValidation;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    const ValidationResult result = blochgas::cli::validate(buffer.str());
    if (!result.ok()) {
        print_errors(result.errors);
        return kExitValidation;
    }
    if (result.config->experiment_name != expected_kind) {
        print_errors({{"$.experiment", "config declares " + result.config->experiment_name +
                                           " but the subcommand expects " + expected_kind}});
        return kExitValidation;
    }
    return blochgas::cli::run_experiment(*result.config, overrides);
}

int run_verify(const std::optional<std::string>& out_path) {
    ExperimentConfig config;
    config.params = blochgas::cli::VerifySuiteExperiment{};
    config.experiment_name = "VerifySuite";
    if (out_path.has_value()) {
        config.output_path = *out_path;
        config.format = OutputFormat::Json;
    }
    return blochgas::cli::run_experiment(config);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mean-field pair-collision dynamics: solvers and figure data"};
    app.require_subcommand(1);
    app.fallthrough();  // accept app-level flags after the subcommand too

    RunOverrides overrides;
    std::string format_flag;
    app.add_option("--threads", overrides.threads, "Worker threads for Monte Carlo runs")
        ->check(CLI::PositiveNumber);

    struct SubcommandSpec {
        const char* name;
        const char* kind;
        const char* help;
    };
    const SubcommandSpec kinds[] = {
        {"trajectory", "MeanfieldTrajectory", "Integrate one mean-field Bloch trajectory"},
        {"dephasing-scan", "DephasingRateScan", "Fit dephasing rates across initial u_z"},
        {"hemisphere-scan", "HemisphereScan", "Purification trajectories to the hemisphere"},
        {"master-curve", "MasterCurve", "Finite-N survival curves plus the continuum"},
        {"gillespie-curve", "GillespieCurve", "Stochastic pair-decay sampling"},
        {"continuum-curve", "ContinuumCurve", "Continuum distribution curves and tables"},
        {"factorization-study", "FactorizationStudy", "Pair-reduction distance vs N"},
    };

    std::string config_path;
    std::optional<std::string> out_override;
    std::optional<std::uint64_t> seed_override;
    std::string chosen_kind;

    for (const auto& spec : kinds) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--config", config_path, "Experiment config file (JSON)")
            ->required();
        sub->add_option_function<std::string>(
            "--out", [&](const std::string& v) { out_override = v; },
            "Override the configured output path");
        sub->add_option("--format", format_flag, "Override the output format (csv|json)")
            ->check(CLI::IsMember({"csv", "json"}));
        if (std::string(spec.name) == "gillespie-curve") {
            sub->add_option_function<std::uint64_t>(
                "--seed", [&](std::uint64_t v) { seed_override = v; },
                "Override the Monte Carlo seed");
        }
        sub->callback([&, kind = spec.kind] { chosen_kind = kind; });
    }

    std::optional<std::string> verify_out;
    CLI::App* verify = app.add_subcommand("verify", "Run every acceptance and invariant check");
    verify->add_option_function<std::string>(
        "--out", [&](const std::string& v) { verify_out = v; },
        "Write a JSON report of the check results");
    verify->callback([&] { chosen_kind = "VerifySuite"; });

    CLI11_PARSE(app, argc, argv);

    if (!format_flag.empty()) {
        overrides.format =
            format_flag == "json" ? OutputFormat::Json : OutputFormat::Csv;
    }
    overrides.output_path = out_override;
    overrides.seed = seed_override;

    try {
        if (chosen_kind == "VerifySuite") {
            return run_verify(verify_out);
        }
        return run_from_config(config_path, chosen_kind, overrides);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return kExitRuntime;
    }
}
