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

#include "blochgas/cli/experiments.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <Eigen/Core>
#include <json.hpp>

#include "blochgas/continuum/distribution.hpp"
#include "blochgas/ensemble/master.hpp"
#include "blochgas/ensemble/nbody.hpp"
#include "blochgas/meanfield/closed_form.hpp"
#include "blochgas/meanfield/integrate.hpp"
#include "blochgas/meanfield/rate_fit.hpp"
#include "blochgas/verify/checks.hpp"

namespace blochgas::cli {

namespace {

using nlohmann::json;

// Index into a trajectory stored with fixed step dt for the i-th of
// `samples` uniformly spaced output rows.
std::size_t sample_index(const meanfield::Trajectory& traj, double t_end, double dt,
                         int samples, int i) {
    const double target = t_end * i / (samples - 1);
    const auto idx = static_cast<std::size_t>(std::llround(target / dt));
    return std::min(idx, traj.size() - 1);
}

json sidecar_for(const ExperimentConfig& config, const Table& table) {
    json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["versions"] = {
        {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                      std::to_string(EIGEN_MAJOR_VERSION) + "." +
                      std::to_string(EIGEN_MINOR_VERSION)},
        {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                              std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                              std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
    j["experiment"] = config.experiment_name;
    j["config_hash"] = config.config_hash;
    j["columns"] = table.columns;
    j["rows"] = table.rows.size();
    j["tolerances"] = {{"density_matrix_hermitian", qcore::kHermitianTolerance},
                       {"density_matrix_trace", qcore::kTraceTolerance},
                       {"density_matrix_positivity", qcore::kPositivityTolerance},
                       {"kraus_completeness", qcore::kCompletenessTolerance},
                       {"bloch_ball", qcore::kBallTolerance}};
    return j;
}

bool write_file(const std::string& path, const std::string& bytes, std::string* error) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        *error = "cannot open " + path + " for writing";
        return false;
    }
    out << bytes;
    out.close();
    if (!out) {
        *error = "failed writing " + path;
        return false;
    }
    return true;
}

int run_verify_suite(const ExperimentConfig& config) {
    const auto checks = verify::all_checks();
    json report = json::array();
    bool all_passed = true;
    for (const auto& check : checks) {
        const verify::CheckResult result = check.run();
        all_passed = all_passed && result.passed;
        std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << check.id << "  "
                  << check.name;
        if (!result.detail.empty()) {
            std::cout << "  (" << result.detail << ")";
        }
        std::cout << "\n" << std::flush;
        report.push_back({{"id", check.id},
                          {"name", check.name},
                          {"passed", result.passed},
                          {"detail", result.detail}});
    }
    std::cout << (all_passed ? "verify: all checks passed"
                             : "verify: some checks FAILED")
              << "\n";
    if (!config.output_path.empty()) {
        json doc;
        doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
        doc["checks"] = report;
        doc["all_passed"] = all_passed;
        std::string error;
        if (!write_file(resolve_output_path(config.output_path), doc.dump(2) + "\n",
                        &error)) {
            std::cerr << error << "\n";
            return 2;
        }
    }
    return all_passed ? 0 : 2;
}

}  // namespace

std::string resolve_output_path(const std::string& path) {
    const char* base = std::getenv("BLOCHGAS_OUT_DIR");
    if (base == nullptr || *base == '\0' || std::filesystem::path(path).is_absolute()) {
        return path;
    }
    return (std::filesystem::path(base) / path).string();
}

Table trajectory_table(const TrajectoryExperiment& exp) {
    const meanfield::Trajectory traj =
        meanfield::integrate(exp.model, exp.u0, exp.t_end, exp.dt);
    Table table;
    table.columns = {"t", "u_x", "u_y", "u_z"};
    for (int i = 0; i < exp.samples; ++i) {
        const std::size_t idx = sample_index(traj, exp.t_end, exp.dt, exp.samples, i);
        const qcore::BlochVector& u = traj.states[idx];
        table.add_row({traj.times[idx], u.x, u.y, u.z});
    }
    return table;
}

Table dephasing_scan_table(const DephasingScanExperiment& exp) {
    Table table;
    table.columns = {"u_z", "fitted_rate", "predicted_rate", "residual"};
    for (double uz : exp.u_z_values) {
        const meanfield::RateReport report =
            meanfield::dephasing_scan_point(exp.theta, exp.gamma, uz, exp.dt);
        const double predicted = meanfield::dephasing_rate(exp.theta, exp.gamma, uz);
        table.add_row({uz, report.fitted_rate, predicted, report.residual});
    }
    return table;
}

Table hemisphere_scan_table(const HemisphereScanExperiment& exp) {
    Table table;
    table.columns = {"t"};
    std::vector<meanfield::Trajectory> trajectories;
    for (std::size_t i = 0; i < exp.u0_values.size(); ++i) {
        table.columns.push_back("u_z_" + std::to_string(i));
        trajectories.push_back(meanfield::integrate(meanfield::ModelSpec::singlet_purification(),
                                                    exp.u0_values[i], exp.t_end, exp.dt));
    }
    for (int i = 0; i < exp.samples; ++i) {
        const std::size_t idx =
            sample_index(trajectories.front(), exp.t_end, exp.dt, exp.samples, i);
        std::vector<double> row{trajectories.front().times[idx]};
        for (const auto& traj : trajectories) {
            row.push_back(traj.states[idx].z);
        }
        table.add_row(std::move(row));
    }
    return table;
}

Table master_curve_table(const MasterCurveExperiment& exp,
                         std::vector<double>* divergence_times) {
    Table table;
    table.columns = {"t"};
    std::vector<ensemble::MasterPropagator> propagators;
    for (int n : exp.n_values) {
        table.columns.push_back("survival_N" + std::to_string(n));
        propagators.emplace_back(ensemble::build_generator(n, exp.gamma),
                                 ensemble::EnsembleState::delta(n, n / 2));
    }
    table.columns.push_back("survival_inf");
    if (divergence_times != nullptr) {
        divergence_times->assign(exp.n_values.size(), -1.0);
    }

    continuum::PointMasses fully_excited;
    fully_excited.x = {1.0};
    fully_excited.w = {1.0};
    for (int i = 0; i < exp.samples; ++i) {
        const double t = exp.t_end * i / (exp.samples - 1);
        std::vector<double> row{t};
        // The continuum mean is exact: the delta at x = 1 rides a
        // characteristic, so survival_inf = 1/(1 + gamma t).
        const double x_inf = continuum::mean_excited(
            continuum::Distribution(continuum::evolve(fully_excited, exp.gamma * t)));
        for (std::size_t k = 0; k < propagators.size(); ++k) {
            const double x_n = ensemble::excited_fraction(propagators[k].at(t));
            row.push_back(x_n);
            if (divergence_times != nullptr && (*divergence_times)[k] < 0.0 &&
                std::abs(x_n - x_inf) > 0.01) {
                (*divergence_times)[k] = t;
            }
        }
        row.push_back(x_inf);
        table.add_row(std::move(row));
    }
    return table;
}

Table gillespie_table(const GillespieCurveExperiment& exp, int threads) {
    const ensemble::McSamples samples = ensemble::gillespie_decay(exp.mc, exp.m0, threads);
    ensemble::MasterPropagator master(ensemble::build_generator(exp.mc.n_atoms, exp.mc.gamma),
                                      ensemble::EnsembleState::delta(exp.mc.n_atoms, exp.m0 / 2));
    Table table;
    table.columns = {"t", "mc_mean", "mc_std_error", "master_mean"};
    for (std::size_t j = 0; j < samples.times.size(); ++j) {
        table.add_row({samples.times[j], samples.mean(j), samples.std_error(j),
                       ensemble::excited_fraction(master.at(samples.times[j]))});
    }
    return table;
}

Table continuum_table(const ContinuumCurveExperiment& exp) {
    Table table;
    if (exp.mean_curve) {
        table.columns = {"t", "mean_excited"};
        for (int i = 0; i < exp.samples; ++i) {
            const double t = exp.t_end * i / (exp.samples - 1);
            const continuum::Distribution moved = continuum::evolve(exp.initial, t);
            table.add_row({t, continuum::mean_excited(moved)});
        }
        return table;
    }
    const auto& grid = std::get<continuum::DensityGrid>(exp.initial);
    const continuum::DensityGrid moved = continuum::evolve(grid, exp.table_time);
    table.columns = {"x", "p"};
    for (std::size_t i = 0; i < moved.x.size(); ++i) {
        table.add_row({moved.x[i], moved.p[i]});
    }
    return table;
}

Table factorization_table(const FactorizationStudyExperiment& exp) {
    const auto model = meanfield::ModelSpec::pair_decay(exp.gamma);
    const auto gen = meanfield::model_pair_generator(model);
    const auto rho0 = qcore::bloch_to_density(exp.u0);
    const meanfield::Trajectory mf = meanfield::integrate(model, exp.u0, exp.t, 1e-3);
    const auto rho_mf = qcore::bloch_to_density(mf.states.back());

    Table table;
    table.columns = {"n_atoms", "defect"};
    for (int n : exp.n_values) {
        const auto rho_n = ensemble::exact_nbody_evolve(n, gen, rho0, exp.t, exp.dt);
        table.add_row({static_cast<double>(n),
                       ensemble::factorization_defect(rho_n, rho_mf)});
    }
    return table;
}

int run_experiment(const ExperimentConfig& config, const RunOverrides& overrides) {
    ExperimentConfig effective = config;
    if (overrides.output_path.has_value()) {
        effective.output_path = *overrides.output_path;
    }
    if (overrides.format.has_value()) {
        effective.format = *overrides.format;
    }

    if (std::holds_alternative<VerifySuiteExperiment>(effective.params)) {
        return run_verify_suite(effective);
    }

    try {
        Table table;
        json extras;
        if (const auto* exp = std::get_if<TrajectoryExperiment>(&effective.params)) {
            table = trajectory_table(*exp);
            extras["dt"] = exp->dt;
        } else if (const auto* exp =
                       std::get_if<DephasingScanExperiment>(&effective.params)) {
            table = dephasing_scan_table(*exp);
            extras["dt"] = exp->dt;
        } else if (const auto* exp =
                       std::get_if<HemisphereScanExperiment>(&effective.params)) {
            table = hemisphere_scan_table(*exp);
            extras["dt"] = exp->dt;
        } else if (const auto* exp = std::get_if<MasterCurveExperiment>(&effective.params)) {
            std::vector<double> divergence;
            table = master_curve_table(*exp, &divergence);
            for (std::size_t k = 0; k < exp->n_values.size(); ++k) {
                const std::string key = "N" + std::to_string(exp->n_values[k]);
                if (divergence[k] >= 0.0) {
                    extras["divergence_time"][key] = divergence[k];
                } else {
                    extras["divergence_time"][key] = nullptr;
                }
            }
        } else if (auto* exp = std::get_if<GillespieCurveExperiment>(&effective.params)) {
            if (overrides.seed.has_value()) {
                exp->mc.seed = *overrides.seed;
            }
            table = gillespie_table(*exp, overrides.threads);
            extras["seed"] = exp->mc.seed;
            extras["runs"] = exp->mc.runs;
        } else if (const auto* exp = std::get_if<ContinuumCurveExperiment>(&effective.params)) {
            table = continuum_table(*exp);
        } else if (const auto* exp =
                       std::get_if<FactorizationStudyExperiment>(&effective.params)) {
            table = factorization_table(*exp);
            extras["dt"] = exp->dt;
        }

        const std::string path = resolve_output_path(effective.output_path);
        const std::string payload =
            effective.format == OutputFormat::Csv ? table.to_csv() : table.to_json();
        std::string error;
        if (!write_file(path, payload, &error)) {
            std::cerr << error << "\n";
            return 2;
        }
        json sidecar = sidecar_for(effective, table);
        if (!extras.is_null()) {
            sidecar["parameters"] = extras;
        }
        if (!write_file(path + ".meta.json", sidecar.dump(2) + "\n", &error)) {
            std::cerr << error << "\n";
            return 2;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "experiment failed: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace blochgas::cli
