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

#include "blochgas/cli/config.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

namespace blochgas::cli {

namespace {

using nlohmann::json;
using Errors = std::vector<ValidationError>;

void add_error(Errors& errors, std::string path, std::string message) {
    errors.push_back({std::move(path), std::move(message)});
}

void reject_unknown(const json& j, const std::string& path,
                    const std::set<std::string>& allowed, Errors& errors) {
    for (const auto& item : j.items()) {
        if (allowed.find(item.key()) == allowed.end()) {
            add_error(errors, path + "." + item.key(), "unknown field");
        }
    }
}

std::optional<double> get_number(const json& j, const std::string& path,
                                 const std::string& key, Errors& errors,
                                 bool required = true) {
    if (!j.contains(key)) {
        if (required) {
            add_error(errors, path + "." + key, "missing required field");
        }
        return std::nullopt;
    }
    if (!j[key].is_number()) {
        add_error(errors, path + "." + key, "must be a number");
        return std::nullopt;
    }
    return j[key].get<double>();
}

std::optional<int> get_integer(const json& j, const std::string& path,
                               const std::string& key, Errors& errors,
                               bool required = true) {
    if (!j.contains(key)) {
        if (required) {
            add_error(errors, path + "." + key, "missing required field");
        }
        return std::nullopt;
    }
    if (!j[key].is_number_integer()) {
        add_error(errors, path + "." + key, "must be an integer");
        return std::nullopt;
    }
    return j[key].get<int>();
}

std::optional<std::string> get_string(const json& j, const std::string& path,
                                      const std::string& key, Errors& errors,
                                      bool required = true) {
    if (!j.contains(key)) {
        if (required) {
            add_error(errors, path + "." + key, "missing required field");
        }
        return std::nullopt;
    }
    if (!j[key].is_string()) {
        add_error(errors, path + "." + key, "must be a string");
        return std::nullopt;
    }
    return j[key].get<std::string>();
}

std::optional<qcore::BlochVector> get_bloch(const json& value, const std::string& path,
                                            Errors& errors) {
    if (!value.is_array() || value.size() != 3 ||
        !(value[0].is_number() && value[1].is_number() && value[2].is_number())) {
        add_error(errors, path, "must be an array of three numbers");
        return std::nullopt;
    }
    qcore::BlochVector u{value[0].get<double>(), value[1].get<double>(),
                         value[2].get<double>()};
    if (!u.in_ball()) {
        std::ostringstream os;
        os << "|u| = " << u.norm() << " lies outside the Bloch ball";
        add_error(errors, path, os.str());
        return std::nullopt;
    }
    return u;
}

std::optional<std::vector<double>> get_number_array(const json& j, const std::string& path,
                                                    const std::string& key, Errors& errors,
                                                    bool required = true) {
    if (!j.contains(key)) {
        if (required) {
            add_error(errors, path + "." + key, "missing required field");
        }
        return std::nullopt;
    }
    if (!j[key].is_array() || j[key].empty()) {
        add_error(errors, path + "." + key, "must be a nonempty array of numbers");
        return std::nullopt;
    }
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) {
            add_error(errors, path + "." + key, "must contain only numbers");
            return std::nullopt;
        }
        out.push_back(v.get<double>());
    }
    return out;
}

double positive(std::optional<double> v, const std::string& path, const std::string& key,
                Errors& errors, double fallback) {
    if (!v.has_value()) {
        return fallback;
    }
    if (*v <= 0.0) {
        add_error(errors, path + "." + key, "must be positive");
        return fallback;
    }
    return *v;
}

int sample_count(const json& j, const std::string& path, Errors& errors,
                 int fallback = 201) {
    const auto samples = get_integer(j, path, "samples", errors, false);
    if (!samples.has_value()) {
        return fallback;
    }
    if (*samples < 2) {
        add_error(errors, path + ".samples", "must be at least 2");
        return fallback;
    }
    return *samples;
}

void require_even_atom_count(int n, const std::string& where, Errors& errors) {
    if (n < 2 || n % 2 != 0) {
        add_error(errors, where, "atom count must be even and >= 2");
    }
}

std::optional<meanfield::ModelSpec> parse_model(const json& j, const std::string& path,
                                                Errors& errors) {
    if (!j.is_object()) {
        add_error(errors, path, "must be an object");
        return std::nullopt;
    }
    reject_unknown(j, path, {"kind", "gamma", "theta"}, errors);
    const auto kind = get_string(j, path, "kind", errors);
    if (!kind.has_value()) {
        return std::nullopt;
    }
    const double gamma = positive(get_number(j, path, "gamma", errors, false), path,
                                  "gamma", errors, 1.0);
    if (*kind == "PairDecay") {
        return meanfield::ModelSpec::pair_decay(gamma);
    }
    if (*kind == "PairDephasing") {
        const auto theta = get_number(j, path, "theta", errors);
        if (!theta.has_value()) {
            return std::nullopt;
        }
        if (std::abs(std::sin(*theta)) < 1e-12) {
            add_error(errors, path + ".theta", "sin(theta) = 0 is the trivial case");
            return std::nullopt;
        }
        return meanfield::ModelSpec::pair_dephasing(*theta, gamma);
    }
    if (*kind == "SingletPurification") {
        if (j.contains("gamma") && j["gamma"].is_number() && j["gamma"].get<double>() != 1.0) {
            add_error(errors, path + ".gamma",
                      "the purification model has unit rate; rescale time instead");
        }
        return meanfield::ModelSpec::singlet_purification();
    }
    add_error(errors, path + ".kind",
              "must be PairDecay, PairDephasing or SingletPurification");
    return std::nullopt;
}

std::optional<continuum::Distribution> parse_initial(const json& j, const std::string& path,
                                                     int grid_points, Errors& errors) {
    if (!j.is_object()) {
        add_error(errors, path, "must be an object");
        return std::nullopt;
    }
    const auto type = get_string(j, path, "type", errors);
    if (!type.has_value()) {
        return std::nullopt;
    }
    if (*type == "point_mass") {
        reject_unknown(j, path, {"type", "x0"}, errors);
        const auto x0 = get_number(j, path, "x0", errors);
        if (!x0.has_value()) {
            return std::nullopt;
        }
        if (*x0 < 0.0 || *x0 > 1.0) {
            add_error(errors, path + ".x0", "must lie in [0, 1]");
            return std::nullopt;
        }
        continuum::PointMasses d;
        d.x = {*x0};
        d.w = {1.0};
        return continuum::Distribution(d);
    }
    if (*type == "uniform") {
        reject_unknown(j, path, {"type"}, errors);
        return continuum::Distribution(continuum::uniform_density(grid_points));
    }
    if (*type == "point_masses") {
        reject_unknown(j, path, {"type", "x", "w"}, errors);
        const auto xs = get_number_array(j, path, "x", errors);
        const auto ws = get_number_array(j, path, "w", errors);
        if (!xs.has_value() || !ws.has_value()) {
            return std::nullopt;
        }
        continuum::PointMasses d;
        d.x = *xs;
        d.w = *ws;
        try {
            d.validate();
        } catch (const std::invalid_argument& e) {
            add_error(errors, path, e.what());
            return std::nullopt;
        }
        return continuum::Distribution(d);
    }
    if (*type == "density") {
        reject_unknown(j, path, {"type", "x", "p"}, errors);
        const auto xs = get_number_array(j, path, "x", errors);
        const auto ps = get_number_array(j, path, "p", errors);
        if (!xs.has_value() || !ps.has_value()) {
            return std::nullopt;
        }
        continuum::DensityGrid d;
        d.x = *xs;
        d.p = *ps;
        try {
            d.validate();
        } catch (const std::invalid_argument& e) {
            add_error(errors, path, e.what());
            return std::nullopt;
        }
        return continuum::Distribution(d);
    }
    add_error(errors, path + ".type",
              "must be point_mass, uniform, point_masses or density");
    return std::nullopt;
}

const std::set<std::string> kCommonKeys = {"experiment", "output_path", "format"};

std::set<std::string> with_common(std::set<std::string> keys) {
    keys.insert(kCommonKeys.begin(), kCommonKeys.end());
    return keys;
}

std::optional<ExperimentParams> parse_trajectory(const json& j, Errors& errors) {
    reject_unknown(j, "$", with_common({"model", "u0", "t_end", "dt", "samples"}), errors);
    auto model = [&]() -> std::optional<meanfield::ModelSpec> {
        if (!j.contains("model")) {
            add_error(errors, "$.model", "missing required field");
            return std::nullopt;
        }
        return parse_model(j["model"], "$.model", errors);
    }();
    std::optional<qcore::BlochVector> u0;
    if (!j.contains("u0")) {
        add_error(errors, "$.u0", "missing required field");
    } else {
        u0 = get_bloch(j["u0"], "$.u0", errors);
    }
    const auto t_end = get_number(j, "$", "t_end", errors, false).value_or(10.0);
    if (t_end < 0.0) {
        add_error(errors, "$.t_end", "must be nonnegative");
    }
    const double gamma_scale = model.has_value() ? model->gamma() : 1.0;
    const double dt =
        positive(get_number(j, "$", "dt", errors, false), "$", "dt", errors,
                 1e-3 / gamma_scale);
    const int samples = sample_count(j, "$", errors);
    if (!model.has_value() || !u0.has_value() || !errors.empty()) {
        return std::nullopt;
    }
    return TrajectoryExperiment{*model, *u0, t_end, dt, samples};
}

std::optional<ExperimentParams> parse_dephasing_scan(const json& j, Errors& errors) {
    reject_unknown(j, "$", with_common({"theta", "gamma", "dt", "u_z_values"}), errors);
    const auto theta = get_number(j, "$", "theta", errors);
    if (theta.has_value() && std::abs(std::sin(*theta)) < 1e-12) {
        add_error(errors, "$.theta", "sin(theta) = 0 is the trivial case");
    }
    const double gamma =
        positive(get_number(j, "$", "gamma", errors, false), "$", "gamma", errors, 1.0);
    const double dt =
        positive(get_number(j, "$", "dt", errors, false), "$", "dt", errors, 1e-3);
    std::vector<double> uz = {-1.0, -0.5, 0.0, 0.5, 1.0};
    if (j.contains("u_z_values")) {
        const auto vals = get_number_array(j, "$", "u_z_values", errors);
        if (vals.has_value()) {
            uz = *vals;
            for (double v : uz) {
                if (v < -1.0 || v > 1.0) {
                    add_error(errors, "$.u_z_values", "entries must lie in [-1, 1]");
                    break;
                }
            }
        }
    }
    if (!theta.has_value() || !errors.empty()) {
        return std::nullopt;
    }
    return DephasingScanExperiment{*theta, gamma, dt, uz};
}

std::optional<ExperimentParams> parse_hemisphere_scan(const json& j, Errors& errors) {
    reject_unknown(j, "$", with_common({"u0_values", "t_end", "dt", "samples"}), errors);
    std::vector<qcore::BlochVector> u0s;
    if (!j.contains("u0_values") || !j["u0_values"].is_array() || j["u0_values"].empty()) {
        add_error(errors, "$.u0_values", "must be a nonempty array of Bloch vectors");
    } else {
        for (std::size_t i = 0; i < j["u0_values"].size(); ++i) {
            std::ostringstream path;
            path << "$.u0_values[" << i << "]";
            const auto u = get_bloch(j["u0_values"][i], path.str(), errors);
            if (u.has_value()) {
                u0s.push_back(*u);
            }
        }
    }
    const auto t_end = get_number(j, "$", "t_end", errors, false).value_or(10.0);
    if (t_end < 0.0) {
        add_error(errors, "$.t_end", "must be nonnegative");
    }
    const double dt =
        positive(get_number(j, "$", "dt", errors, false), "$", "dt", errors, 1e-3);
    const int samples = sample_count(j, "$", errors);
    if (!errors.empty()) {
        return std::nullopt;
    }
    return HemisphereScanExperiment{u0s, t_end, dt, samples};
}

std::optional<ExperimentParams> parse_master_curve(const json& j, Errors& errors) {
    reject_unknown(j, "$", with_common({"n_values", "gamma", "t_end", "samples"}), errors);
    std::vector<int> n_values = {16, 64, 256};
    if (j.contains("n_values")) {
        if (!j["n_values"].is_array() || j["n_values"].empty()) {
            add_error(errors, "$.n_values", "must be a nonempty array of even integers");
        } else {
            n_values.clear();
            for (std::size_t i = 0; i < j["n_values"].size(); ++i) {
                if (!j["n_values"][i].is_number_integer()) {
                    add_error(errors, "$.n_values", "must contain only integers");
                    break;
                }
                const int n = j["n_values"][i].get<int>();
                std::ostringstream path;
                path << "$.n_values[" << i << "]";
                require_even_atom_count(n, path.str(), errors);
                n_values.push_back(n);
            }
        }
    }
    const double gamma =
        positive(get_number(j, "$", "gamma", errors, false), "$", "gamma", errors, 1.0);
    const auto t_end = get_number(j, "$", "t_end", errors, false).value_or(10.0);
    if (t_end < 0.0) {
        add_error(errors, "$.t_end", "must be nonnegative");
    }
    const int samples = sample_count(j, "$", errors);
    if (!errors.empty()) {
        return std::nullopt;
    }
    return MasterCurveExperiment{n_values, gamma, t_end, samples};
}

std::optional<ExperimentParams> parse_gillespie(const json& j, Errors& errors) {
    reject_unknown(
        j, "$", with_common({"n_atoms", "gamma", "runs", "seed", "m0", "sample_times"}),
        errors);
    ensemble::McConfig mc;
    const auto n = get_integer(j, "$", "n_atoms", errors);
    if (n.has_value()) {
        require_even_atom_count(*n, "$.n_atoms", errors);
        mc.n_atoms = *n;
    }
    mc.gamma =
        positive(get_number(j, "$", "gamma", errors, false), "$", "gamma", errors, 1.0);
    const auto runs = get_integer(j, "$", "runs", errors, false).value_or(10000);
    if (runs < 1) {
        add_error(errors, "$.runs", "must be at least 1");
    }
    mc.runs = runs;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
            add_error(errors, "$.seed", "must be an unsigned integer");
        } else {
            mc.seed = j["seed"].get<std::uint64_t>();
        }
    }
    mc.sample_times = {0.5, 1.0, 2.0, 5.0};
    if (j.contains("sample_times")) {
        const auto times = get_number_array(j, "$", "sample_times", errors);
        if (times.has_value()) {
            mc.sample_times = *times;
            double prev = -1.0;
            for (double t : mc.sample_times) {
                if (t < 0.0 || t <= prev) {
                    add_error(errors, "$.sample_times",
                              "must be strictly ascending and nonnegative");
                    break;
                }
                prev = t;
            }
        }
    }
    int m0 = n.value_or(0);
    if (j.contains("m0")) {
        const auto m = get_integer(j, "$", "m0", errors);
        if (m.has_value()) {
            m0 = *m;
        }
    }
    if (n.has_value() && (m0 < 0 || m0 > *n || m0 % 2 != 0)) {
        add_error(errors, "$.m0", "must be even and within [0, n_atoms]");
    }
    if (!errors.empty()) {
        return std::nullopt;
    }
    return GillespieCurveExperiment{mc, m0};
}

std::optional<ExperimentParams> parse_continuum(const json& j, Errors& errors) {
    reject_unknown(
        j, "$",
        with_common({"initial", "mode", "t_end", "samples", "time", "grid_points"}),
        errors);
    int grid_points = get_integer(j, "$", "grid_points", errors, false).value_or(2048);
    if (grid_points < 2) {
        add_error(errors, "$.grid_points", "must be at least 2");
        grid_points = 2048;
    }
    std::optional<continuum::Distribution> initial;
    if (!j.contains("initial")) {
        add_error(errors, "$.initial", "missing required field");
    } else {
        initial = parse_initial(j["initial"], "$.initial", grid_points, errors);
    }
    bool mean_curve = true;
    if (j.contains("mode")) {
        const auto mode = get_string(j, "$", "mode", errors);
        if (mode.has_value()) {
            if (*mode == "density_table") {
                mean_curve = false;
            } else if (*mode != "mean_curve") {
                add_error(errors, "$.mode", "must be mean_curve or density_table");
            }
        }
    }
    const auto t_end = get_number(j, "$", "t_end", errors, false).value_or(10.0);
    if (t_end < 0.0) {
        add_error(errors, "$.t_end", "must be nonnegative");
    }
    const int samples = sample_count(j, "$", errors);
    const auto table_time = get_number(j, "$", "time", errors, false).value_or(1.0);
    if (table_time < 0.0) {
        add_error(errors, "$.time", "must be nonnegative");
    }
    if (!mean_curve && initial.has_value() &&
        std::holds_alternative<continuum::PointMasses>(*initial)) {
        add_error(errors, "$.mode",
                  "density_table requires a density initial distribution");
    }
    if (!initial.has_value() || !errors.empty()) {
        return std::nullopt;
    }
    return ContinuumCurveExperiment{std::move(*initial), mean_curve, t_end, samples,
                                    table_time};
}

std::optional<ExperimentParams> parse_factorization(const json& j, Errors& errors) {
    reject_unknown(j, "$", with_common({"n_values", "u0", "gamma", "t", "dt"}), errors);
    std::vector<int> n_values = {4, 6, 8};
    if (j.contains("n_values")) {
        if (!j["n_values"].is_array() || j["n_values"].empty()) {
            add_error(errors, "$.n_values", "must be a nonempty array of integers");
        } else {
            n_values.clear();
            for (std::size_t i = 0; i < j["n_values"].size(); ++i) {
                if (!j["n_values"][i].is_number_integer()) {
                    add_error(errors, "$.n_values", "must contain only integers");
                    break;
                }
                const int n = j["n_values"][i].get<int>();
                if (n < 2 || n > 8) {
                    std::ostringstream path;
                    path << "$.n_values[" << i << "]";
                    add_error(errors, path.str(), "exact solver supports 2..8 atoms");
                }
                n_values.push_back(n);
            }
        }
    }
    qcore::BlochVector u0{0.5, 0.0, -0.5};
    if (j.contains("u0")) {
        const auto u = get_bloch(j["u0"], "$.u0", errors);
        if (u.has_value()) {
            u0 = *u;
        }
    }
    const double gamma =
        positive(get_number(j, "$", "gamma", errors, false), "$", "gamma", errors, 1.0);
    const auto t = get_number(j, "$", "t", errors, false).value_or(1.0);
    if (t < 0.0) {
        add_error(errors, "$.t", "must be nonnegative");
    }
    const double dt =
        positive(get_number(j, "$", "dt", errors, false), "$", "dt", errors, 1e-2);
    if (!errors.empty()) {
        return std::nullopt;
    }
    return FactorizationStudyExperiment{n_values, u0, gamma, t, dt};
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

ValidationResult validate(const std::string& config_text) {
    ValidationResult result;
    json j;
    try {
        j = json::parse(config_text);
    } catch (const json::parse_error& e) {
        add_error(result.errors, "$", std::string("not valid JSON: ") + e.what());
        return result;
    }
    if (!j.is_object()) {
        add_error(result.errors, "$", "config must be a JSON object");
        return result;
    }

    const auto experiment = get_string(j, "$", "experiment", result.errors);
    if (!experiment.has_value()) {
        return result;
    }

    OutputFormat format = OutputFormat::Csv;
    if (j.contains("format")) {
        const auto f = get_string(j, "$", "format", result.errors);
        if (f.has_value()) {
            if (*f == "json") {
                format = OutputFormat::Json;
            } else if (*f != "csv") {
                add_error(result.errors, "$.format", "must be csv or json");
            }
        }
    }

    const bool is_verify = *experiment == "VerifySuite";
    std::string output_path;
    if (j.contains("output_path")) {
        const auto p = get_string(j, "$", "output_path", result.errors);
        if (p.has_value()) {
            output_path = *p;
        }
    } else if (!is_verify) {
        add_error(result.errors, "$.output_path", "missing required field");
    }

    std::optional<ExperimentParams> params;
    if (is_verify) {
        reject_unknown(j, "$", with_common({}), result.errors);
        if (result.errors.empty()) {
            params = VerifySuiteExperiment{};
        }
    } else if (*experiment == "MeanfieldTrajectory") {
        params = parse_trajectory(j, result.errors);
    } else if (*experiment == "DephasingRateScan") {
        params = parse_dephasing_scan(j, result.errors);
    } else if (*experiment == "HemisphereScan") {
        params = parse_hemisphere_scan(j, result.errors);
    } else if (*experiment == "MasterCurve") {
        params = parse_master_curve(j, result.errors);
    } else if (*experiment == "GillespieCurve") {
        params = parse_gillespie(j, result.errors);
    } else if (*experiment == "ContinuumCurve") {
        params = parse_continuum(j, result.errors);
    } else if (*experiment == "FactorizationStudy") {
        params = parse_factorization(j, result.errors);
    } else {
        add_error(result.errors, "$.experiment", "unknown experiment kind");
    }

    if (!params.has_value() || !result.errors.empty()) {
        return result;
    }
    ExperimentConfig config{std::move(*params), *experiment, output_path, format,
                            fnv1a_hex(config_text)};
    result.config = std::move(config);
    return result;
}

}  // namespace blochgas::cli
