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

#include "blochgas/verify/checks.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "blochgas/cli/experiments.hpp"
#include "blochgas/continuum/distribution.hpp"
#include "blochgas/ensemble/gillespie.hpp"
#include "blochgas/ensemble/master.hpp"
#include "blochgas/ensemble/nbody.hpp"
#include "blochgas/meanfield/closed_form.hpp"
#include "blochgas/meanfield/integrate.hpp"
#include "blochgas/meanfield/model.hpp"
#include "blochgas/meanfield/rate_fit.hpp"
#include "blochgas/qcore/operators.hpp"
#include "blochgas/qcore/pair_generator.hpp"

namespace blochgas::verify {

namespace {

using namespace blochgas::meanfield;
using qcore::BlochVector;
using qcore::bloch_to_density;
using qcore::DensityMatrix;

constexpr double kPi = std::numbers::pi;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_ = Clock::now();
};

// Deterministic ball sampling, independent of the test suites.
class BallSampler {
public:
    explicit BallSampler(std::uint64_t seed) : rng_(seed), dist_(-1.0, 1.0) {}
    BlochVector next() {
        while (true) {
            BlochVector u{dist_(rng_), dist_(rng_), dist_(rng_)};
            if (u.norm_squared() <= 1.0) {
                return u;
            }
        }
    }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> dist_;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

CheckResult pass(std::string detail) { return {true, std::move(detail)}; }
CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

double purity(const BlochVector& u) { return 0.5 * (1.0 + u.norm_squared()); }

double continuum_survival(double t) {
    continuum::PointMasses delta;
    delta.x = {1.0};
    delta.w = {1.0};
    return continuum::mean_excited(continuum::Distribution(continuum::evolve(delta, t)));
}

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

CheckResult check_decay_law() {
    Stopwatch watch;
    const Trajectory traj = integrate(ModelSpec::pair_decay(1.0), {0, 0, -1}, 20.0, 1e-3);
    double worst = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double exact = decay_uz_exact(-1.0, 1.0, traj.times[k]);
        worst = std::max(worst, std::abs(traj.states[k].z - exact));
    }
    const double elapsed = watch.seconds();
    std::string detail = "max |u_z - (1/2 + t/2)^-1 law| = " + fmt(worst) +
                         " (tol 1e-8), runtime " + fmt(elapsed) + " s";
    if (worst > 1e-8) {
        return fail(detail);
    }
    if (elapsed >= 1.0) {
        return fail(detail + "; runtime budget 1 s exceeded");
    }
    return pass(detail);
}

CheckResult check_parabolas() {
    BallSampler sampler(0x0002);
    double worst = 0.0;
    int states = 0;
    while (states < 20) {
        const BlochVector u0 = sampler.next();
        if (1.0 - u0.z < 1e-3) {
            continue;  // trajectories from the north pole are a single point
        }
        ++states;
        const Trajectory traj = integrate(ModelSpec::pair_decay(1.0), u0, 20.0, 1e-3);
        const double cx = u0.x * u0.x / (1.0 - u0.z);
        const double cy = u0.y * u0.y / (1.0 - u0.z);
        for (const BlochVector& u : traj.states) {
            worst = std::max(worst, std::abs(u.x * u.x / (1.0 - u.z) - cx));
            worst = std::max(worst, std::abs(u.y * u.y / (1.0 - u.z) - cy));
        }
    }
    std::string detail =
        "max drift of u_xy^2/(1-u_z) over 20 states = " + fmt(worst) + " (tol 1e-8)";
    return worst <= 1e-8 ? pass(detail) : fail(detail);
}

CheckResult check_dephasing_rates() {
    const double uz_grid[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    double worst = 0.0;
    for (double uz : uz_grid) {
        const RateReport report = dephasing_scan_point(kPi / 4.0, 1.0, uz, 1e-3);
        worst = std::max(worst, std::abs(report.fitted_rate - 0.5 * (1.0 + uz)));
    }

    double lo = 1e300, hi = -1e300;
    for (double uz : uz_grid) {
        const double rate = dephasing_scan_point(kPi / 2.0, 1.0, uz, 1e-3).fitted_rate;
        lo = std::min(lo, rate);
        hi = std::max(hi, rate);
    }
    const double spread = hi - lo;
    std::string detail = "theta=pi/4: max |fit - gamma(1+u_z)/2| = " + fmt(worst) +
                         " (tol 1e-6); theta=pi/2 spread = " + fmt(spread) +
                         " (tol 1e-9)";
    return (worst <= 1e-6 && spread <= 1e-9) ? pass(detail) : fail(detail);
}

CheckResult check_hemisphere_flow() {
    const BlochVector starts[] = {{0, 0, 0}, {0.6, 0, -0.2}, {0.3, 0.4, 0}};
    double worst_err = 0.0;
    double worst_drift = 0.0;
    double worst_purity_drop = 0.0;
    for (const BlochVector& u0 : starts) {
        const Trajectory traj =
            integrate(ModelSpec::singlet_purification(), u0, 10.0, 1e-3);
        double previous_purity = purity(traj.states.front());
        for (std::size_t k = 0; k < traj.size(); ++k) {
            const BlochVector& u = traj.states[k];
            const BlochVector exact = hemisphere_exact(u0, traj.times[k]);
            worst_err = std::max(worst_err, std::abs(u.z - exact.z));
            worst_drift = std::max({worst_drift, std::abs(u.x - u0.x),
                                    std::abs(u.y - u0.y)});
            const double p = purity(u);
            worst_purity_drop = std::max(worst_purity_drop, previous_purity - p);
            previous_purity = p;
        }
    }
    std::string detail = "max |u_z - tanh form| = " + fmt(worst_err) +
                         " (tol 1e-8); transverse drift = " + fmt(worst_drift) +
                         " (tol 1e-10); largest purity decrease along a trajectory = " +
                         fmt(worst_purity_drop) + " (required <= 0)";
    const bool ok = worst_err <= 1e-8 && worst_drift <= 1e-10 && worst_purity_drop <= 1e-12;
    if (!ok && worst_purity_drop > 1e-12) {
        detail += "; Tr rho^2 is not monotone from (0.6, 0, -0.2): d(Tr rho^2)/dt = "
                  "u_z det(rho) < 0 while u_z < 0";
    }
    return ok ? pass(detail) : fail(detail);
}

CheckResult check_singlet_identity() {
    BallSampler sampler(0x0005);
    const auto gen = model_pair_generator(ModelSpec::singlet_purification());
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = bloch_to_density(sampler.next());
        const double det = rho.matrix().determinant().real();
        const Eigen::Matrix2cd expected = 0.5 * det * qcore::pauli_z();
        worst = std::max(worst,
                         (meanfield_rhs(gen, rho) - expected).cwiseAbs().maxCoeff());
    }
    std::string detail =
        "max |Tr_2 L(rho x rho) - (det rho/2) sigma_z| over 100 states = " + fmt(worst) +
        " (tol 1e-12)";
    return worst <= 1e-12 ? pass(detail) : fail(detail);
}

CheckResult check_generator_spectrum() {
    const double gamma = 1.0;
    for (int n_atoms : {2, 4, 10, 100}) {
        const ensemble::DecayGenerator gen = ensemble::build_generator(n_atoms, gamma);
        for (int col = 0; col < gen.levels(); ++col) {
            if (gen.matrix.col(col).sum() != 0.0) {
                return fail("column sum nonzero at N=" + std::to_string(n_atoms));
            }
            // Upper triangular, so the diagonal is the spectrum.
            if (gen.matrix(col, col) / n_atoms != gamma * col * (2.0 * col - 1.0) / n_atoms) {
                return fail("eigenvalue mismatch at N=" + std::to_string(n_atoms));
            }
            for (int row = 0; row < gen.levels(); ++row) {
                const bool structural = (row == col) || (row + 1 == col);
                if (!structural && gen.matrix(row, col) != 0.0) {
                    return fail("unexpected entry outside the bidiagonal band");
                }
            }
        }
    }
    return pass("eigenvalues read off the diagonal equal gamma n(2n-1)/N exactly; "
                "columns sum to 0 exactly (N in {2,4,10,100})");
}

CheckResult check_survival_convergence() {
    Stopwatch watch;
    double previous = 1e300;
    std::string per_n;
    for (int n_atoms : {16, 64, 256}) {
        ensemble::MasterPropagator prop(ensemble::build_generator(n_atoms, 1.0),
                                        ensemble::EnsembleState::delta(n_atoms, n_atoms / 2));
        double sup = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double t = 10.0 * i / 200.0;
            sup = std::max(sup, std::abs(ensemble::excited_fraction(prop.at(t)) -
                                         continuum_survival(t)));
        }
        per_n += " N" + std::to_string(n_atoms) + "=" + fmt(sup);
        if (sup >= previous) {
            return fail("sup distance did not decrease:" + per_n);
        }
        previous = sup;
    }
    const double elapsed = watch.seconds();
    std::string detail = "sup|x_N - x_inf| strictly decreasing:" + per_n + "; runtime " +
                         fmt(elapsed) + " s (budget 10 s)";
    return elapsed < 10.0 ? pass(detail) : fail(detail);
}

CheckResult check_cross_solver() {
    Stopwatch watch;
    ensemble::McConfig cfg;
    cfg.n_atoms = 1000;
    cfg.gamma = 1.0;
    cfg.runs = 10000;
    cfg.seed = 12345;
    cfg.sample_times = {0.5, 1.0, 2.0, 5.0};
    const ensemble::McSamples samples = ensemble::gillespie_decay(cfg, 1000);

    ensemble::MasterPropagator master(ensemble::build_generator(1000, 1.0),
                                      ensemble::EnsembleState::delta(1000, 500));
    double worst_sigma = 0.0;
    for (std::size_t j = 0; j < samples.times.size(); ++j) {
        const double reference = ensemble::excited_fraction(master.at(samples.times[j]));
        const double gap = std::abs(samples.mean(j) - reference);
        worst_sigma = std::max(worst_sigma, gap / samples.std_error(j));
    }
    const double elapsed = watch.seconds();
    std::string detail = "max |MC - master| = " + fmt(worst_sigma) +
                         " standard errors (tol 3, N=1000, 10^4 runs, seed 12345); runtime " +
                         fmt(elapsed) + " s (budget 60 s)";
    return (worst_sigma <= 3.0 && elapsed < 60.0) ? pass(detail) : fail(detail);
}

CheckResult check_factorization() {
    Stopwatch watch;
    const BlochVector u0{0.5, 0.0, -0.5};
    const auto gen = model_pair_generator(ModelSpec::pair_decay(1.0));
    const auto rho0 = bloch_to_density(u0);
    const Trajectory mf = integrate(ModelSpec::pair_decay(1.0), u0, 1.0, 1e-3);
    const auto rho_mf = bloch_to_density(mf.states.back());

    double defects[3] = {0, 0, 0};
    const int sizes[3] = {4, 6, 8};
    for (int k = 0; k < 3; ++k) {
        const auto rho_n = ensemble::exact_nbody_evolve(sizes[k], gen, rho0, 1.0, 1e-2);
        defects[k] = ensemble::factorization_defect(rho_n, rho_mf);
    }
    const double ratio = defects[0] / defects[2];
    const double elapsed = watch.seconds();
    std::string detail = "defects at gamma t = 1: N4=" + fmt(defects[0]) +
                         " N6=" + fmt(defects[1]) + " N8=" + fmt(defects[2]) +
                         "; ratio N4/N8 = " + fmt(ratio) + " (required in [1.5, 3]); runtime " +
                         fmt(elapsed) + " s (budget 120 s)";
    const bool ok = defects[0] > defects[1] && defects[1] > defects[2] && ratio >= 1.5 &&
                    ratio <= 3.0 && elapsed < 120.0;
    return ok ? pass(detail) : fail(detail);
}

CheckResult check_continuum_exactness() {
    continuum::PointMasses delta;
    delta.x = {1.0};
    delta.w = {1.0};
    double worst_pos = 0.0;
    for (double t : {1.0, 3.0, 10.0}) {
        const continuum::PointMasses moved = continuum::evolve(delta, t);
        worst_pos = std::max(worst_pos, std::abs(moved.x[0] - 1.0 / (1.0 + t)));
    }

    const continuum::DensityGrid smooth = continuum::density_from_function(
        [](double x) { return 6.0 * x * (1.0 - x); }, 2048);
    double worst_mass = 0.0;
    for (double t : {0.0, 1.0, 5.0}) {
        worst_mass = std::max(worst_mass,
                              std::abs(continuum::evolve(smooth, t).mass() - 1.0));
    }

    continuum::PointMasses spread;
    spread.x = {0.2, 0.6, 1.0};
    spread.w = {0.3, 0.3, 0.4};
    const continuum::PointMasses two = continuum::evolve(continuum::evolve(spread, 1.25), 2.5);
    const continuum::PointMasses one = continuum::evolve(spread, 3.75);
    double worst_semi = 0.0;
    for (std::size_t i = 0; i < spread.x.size(); ++i) {
        worst_semi = std::max(worst_semi, std::abs(two.x[i] - one.x[i]));
    }

    std::string detail = "delta position error = " + fmt(worst_pos) +
                         " (tol 1e-14); quadrature mass error = " + fmt(worst_mass) +
                         " (tol 1e-6); semigroup error = " + fmt(worst_semi) +
                         " (tol 1e-14)";
    const bool ok = worst_pos <= 1e-14 && worst_mass <= 1e-6 && worst_semi <= 1e-14;
    return ok ? pass(detail) : fail(detail);
}

CheckResult check_physicality() {
    double worst_ball = 0.0;    // |u| - 1
    double worst_trace = 0.0;   // |Tr rho - 1|
    double worst_eig = 0.0;     // max(0, -min eigenvalue)

    const BlochVector starts[] = {{0, 0, -1}, {0.5, 0, -0.5}, {0.3, 0.4, 0},
                                  {0.6, 0, -0.2}};
    const ModelSpec models[] = {ModelSpec::pair_decay(1.0),
                                ModelSpec::pair_dephasing(kPi / 4.0, 1.0),
                                ModelSpec::singlet_purification()};
    for (const ModelSpec& model : models) {
        for (const BlochVector& u0 : starts) {
            const Trajectory traj = integrate(model, u0, 10.0, 1e-3);
            for (std::size_t k = 0; k < traj.size(); ++k) {
                worst_ball = std::max(worst_ball, traj.states[k].norm() - 1.0);
            }
            for (std::size_t k = 0; k < traj.size(); k += 100) {
                const Eigen::Matrix2cd rho = bloch_to_density(traj.states[k]).matrix();
                worst_trace = std::max(worst_trace, std::abs(rho.trace().real() - 1.0));
                worst_eig = std::max(worst_eig, -qcore::min_eigenvalue(rho));
            }
        }
    }

    const auto gen = model_pair_generator(ModelSpec::pair_decay(1.0));
    for (double t : {0.25, 0.5, 1.0}) {
        const DensityMatrix rho =
            ensemble::exact_nbody_evolve(4, gen, bloch_to_density({0.5, 0, -0.5}), t, 1e-2);
        worst_trace = std::max(worst_trace, std::abs(rho.matrix().trace().real() - 1.0));
        worst_eig = std::max(worst_eig, -qcore::min_eigenvalue(rho.matrix()));
    }

    for (int n_atoms : {16, 256}) {
        ensemble::MasterPropagator prop(ensemble::build_generator(n_atoms, 1.0),
                                        ensemble::EnsembleState::delta(n_atoms, n_atoms / 2));
        for (double t = 0.0; t <= 10.0; t += 0.5) {
            const ensemble::EnsembleState p = prop.at(t);
            worst_eig = std::max(worst_eig, -p.probs.minCoeff());
            worst_trace = std::max(worst_trace, std::abs(p.probs.sum() - 1.0));
        }
    }

    std::string detail = "max(|u|-1) = " + fmt(worst_ball) +
                         " (tol 1e-8); max |Tr-1| = " + fmt(worst_trace) +
                         " (tol 1e-10); worst negative eigenvalue = " + fmt(worst_eig) +
                         " (tol 1e-10)";
    const bool ok = worst_ball <= 1e-8 && worst_trace <= 1e-10 && worst_eig <= 1e-10;
    return ok ? pass(detail) : fail(detail);
}

// ---------------------------------------------------------------------------
// Invariant checks beyond the acceptance list
// ---------------------------------------------------------------------------

CheckResult check_closed_fields() {
    BallSampler sampler(0x1001);
    const auto decay = model_pair_generator(ModelSpec::pair_decay(1.7));
    const auto deph = model_pair_generator(ModelSpec::pair_dephasing(0.6, 0.8));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const BlochVector u = sampler.next();
        const BlochVector d1 = qcore::meanfield_rhs_bloch(decay, u);
        const double eff = 1.7 * (1.0 - u.z) / 2.0;
        worst = std::max({worst, std::abs(d1.x + 0.5 * eff * u.x),
                          std::abs(d1.y + 0.5 * eff * u.y),
                          std::abs(d1.z + eff * (u.z - 1.0))});
        const BlochVector d2 = qcore::meanfield_rhs_bloch(deph, u);
        const double g = dephasing_rate(0.6, 0.8, u.z);
        worst = std::max({worst, std::abs(d2.x + g * u.x), std::abs(d2.y + g * u.y),
                          std::abs(d2.z)});
    }
    std::string detail =
        "max deviation from the closed decay/dephasing fields = " + fmt(worst) +
        " (tol 1e-12, 100 states)";
    return worst <= 1e-12 ? pass(detail) : fail(detail);
}

CheckResult check_rhs_traceless() {
    BallSampler sampler(0x1002);
    double worst = 0.0;
    for (const ModelSpec& model :
         {ModelSpec::pair_decay(1.0), ModelSpec::pair_dephasing(1.1, 0.5),
          ModelSpec::singlet_purification()}) {
        const auto gen = model_pair_generator(model);
        for (int i = 0; i < 30; ++i) {
            const Eigen::Matrix2cd rhs = meanfield_rhs(gen, bloch_to_density(sampler.next()));
            worst = std::max(worst, std::abs(rhs.trace()));
            worst = std::max(worst, qcore::hermiticity_defect(rhs));
        }
    }
    std::string detail = "max |Tr rhs| and Hermiticity defect = " + fmt(worst) +
                         " (tol 1e-12)";
    return worst <= 1e-12 ? pass(detail) : fail(detail);
}

CheckResult check_partial_trace_product() {
    std::mt19937_64 rng(0x1003);
    std::normal_distribution<double> n01(0.0, 1.0);
    auto random_density = [&](int dim) {
        Eigen::MatrixXcd m(dim, dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                m(i, j) = qcore::Complex(n01(rng), n01(rng));
            }
        }
        Eigen::MatrixXcd rho = m * m.adjoint();
        rho /= rho.trace();
        return rho;
    };
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Eigen::MatrixXcd rho = random_density(2);
        const Eigen::MatrixXcd sigma = random_density(2);
        worst = std::max(worst, (qcore::ptrace_trailing(qcore::kron(rho, sigma), 2) - rho)
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    std::string detail = "max |Tr_2(rho x sigma) - rho| = " + fmt(worst) + " (tol 1e-14)";
    return worst <= 1e-14 ? pass(detail) : fail(detail);
}

CheckResult check_generator_is_channel_minus_identity() {
    std::mt19937_64 rng(0x1004);
    std::normal_distribution<double> n01(0.0, 1.0);
    const auto chan = singlet_channel();
    const auto gen = qcore::generator_from_channel(chan, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        Eigen::Matrix4cd m;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                m(r, c) = qcore::Complex(n01(rng), n01(rng));
            }
        }
        Eigen::Matrix4cd rho = m * m.adjoint();
        rho /= rho.trace();
        worst = std::max(worst, (gen.apply(rho) - (chan.apply_raw(rho) - rho))
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    std::string detail = "max |L rho - (K - 1) rho| = " + fmt(worst) + " (tol 1e-12)";
    return worst <= 1e-12 ? pass(detail) : fail(detail);
}

CheckResult check_oracle_agreement() {
    BallSampler sampler(0x1005);
    double worst = 0.0;
    for (const ModelSpec& model :
         {ModelSpec::pair_decay(1.0), ModelSpec::pair_dephasing(kPi / 5.0, 1.0),
          ModelSpec::singlet_purification()}) {
        for (int i = 0; i < 20; ++i) {
            const BlochVector u0 = sampler.next();
            const Trajectory traj = integrate(model, u0, 5.0, 1e-3);
            for (std::size_t k = 0; k < traj.size(); ++k) {
                worst = std::max(worst, qcore::max_abs_diff(
                                            traj.states[k],
                                            model_exact(model, u0, traj.times[k])));
            }
        }
    }
    std::string detail = "max |numeric - exact| over all models/states/times = " +
                         fmt(worst) + " (tol 1e-8)";
    return worst <= 1e-8 ? pass(detail) : fail(detail);
}

CheckResult check_constants_of_motion() {
    BallSampler sampler(0x1006);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        const BlochVector u0 = sampler.next();
        for (const BlochVector& u :
             integrate(ModelSpec::pair_dephasing(kPi / 3.0, 1.0), u0, 20.0, 1e-3).states) {
            worst = std::max(worst, std::abs(u.z - u0.z));
        }
        for (const BlochVector& u :
             integrate(ModelSpec::singlet_purification(), u0, 20.0, 1e-3).states) {
            worst = std::max({worst, std::abs(u.x - u0.x), std::abs(u.y - u0.y)});
        }
    }
    std::string detail = "max drift of conserved components over 20/gamma = " + fmt(worst) +
                         " (tol 1e-10)";
    return worst <= 1e-10 ? pass(detail) : fail(detail);
}

CheckResult check_purity_monotone() {
    // As specified: Tr rho^2 must never decrease under the purifying channel.
    // The flow obeys d(Tr rho^2)/dt = u_z det(rho), so trajectories entering
    // from the lower half-ball dip before they purify; expect this check to
    // fail there and report the measured dip.
    const BlochVector starts[] = {{0, 0, 0}, {0.3, 0.4, 0}, {0.5, 0, 0.5},
                                  {0.6, 0, -0.2}, {0, 0, -0.5}};
    double worst_drop = 0.0;
    BlochVector worst_start{};
    for (const BlochVector& u0 : starts) {
        const Trajectory traj = integrate(ModelSpec::singlet_purification(), u0, 20.0, 1e-3);
        double prev = purity(traj.states.front());
        for (const BlochVector& u : traj.states) {
            const double p = purity(u);
            if (prev - p > worst_drop) {
                worst_drop = prev - p;
                worst_start = u0;
            }
            prev = p;
        }
    }
    std::ostringstream os;
    os << "largest per-step purity decrease = " << fmt(worst_drop);
    if (worst_drop > 1e-12) {
        os << " from u0 = (" << worst_start.x << ", " << worst_start.y << ", "
           << worst_start.z << "); monotonicity holds only for u_z(0) >= 0";
    }
    return worst_drop <= 1e-12 ? pass(os.str()) : fail(os.str());
}

CheckResult check_rate_interval() {
    const double theta = kPi / 4.0;
    const double s2 = std::sin(theta) * std::sin(theta);
    const double lo = s2 * (1.0 - std::sin(2.0 * theta));
    const double hi = s2 * (1.0 + std::sin(2.0 * theta));
    double worst_outside = 0.0;
    for (double uz : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const double rate = dephasing_scan_point(theta, 1.0, uz, 1e-3).fitted_rate;
        worst_outside = std::max({worst_outside, lo - rate, rate - hi});
    }
    const double at_lo = dephasing_scan_point(theta, 1.0, -1.0, 1e-3).fitted_rate;
    const double at_hi = dephasing_scan_point(theta, 1.0, 1.0, 1e-3).fitted_rate;
    const double endpoint_err = std::max(std::abs(at_lo - lo), std::abs(at_hi - hi));
    std::string detail = "interval excursion = " + fmt(worst_outside) +
                         " (tol 1e-6); endpoint error = " + fmt(endpoint_err) +
                         " (tol 1e-6)";
    return (worst_outside <= 1e-6 && endpoint_err <= 1e-6) ? pass(detail) : fail(detail);
}

CheckResult check_probability_preservation() {
    double worst_neg = 0.0;
    double worst_sum = 0.0;
    for (int n_atoms : {16, 64, 256, 1000}) {
        ensemble::MasterPropagator prop(ensemble::build_generator(n_atoms, 1.0),
                                        ensemble::EnsembleState::delta(n_atoms, n_atoms / 2));
        for (double t = 0.0; t <= 10.0; t += 1.0) {
            const ensemble::EnsembleState p = prop.at(t);
            worst_neg = std::max(worst_neg, -p.probs.minCoeff());
            worst_sum = std::max(worst_sum, std::abs(p.probs.sum() - 1.0));
        }
    }
    std::string detail = "worst negative entry = " + fmt(worst_neg) +
                         " (tol 1e-12); worst mass error = " + fmt(worst_sum) +
                         " (tol 1e-10)";
    return (worst_neg <= 1e-12 && worst_sum <= 1e-10) ? pass(detail) : fail(detail);
}

CheckResult check_rate_span() {
    for (int n_atoms : {2, 16, 100, 1000}) {
        const ensemble::DecayGenerator gen = ensemble::build_generator(n_atoms, 1.0);
        if (gen.rate(1) / n_atoms != 1.0 / n_atoms) {
            return fail("smallest nonzero rate is not gamma/N");
        }
        const double top = gen.rate(gen.levels() - 1) / n_atoms;
        if (std::abs(top - (n_atoms - 1) / 2.0) > 1e-12 * n_atoms) {
            return fail("largest rate is not gamma (N-1)/2");
        }
    }
    return pass("nonzero rates of G/N span gamma/N .. gamma (N-1)/2");
}

CheckResult check_nbody_conservation() {
    const auto gen = model_pair_generator(ModelSpec::pair_decay(1.0));
    const DensityMatrix rho =
        ensemble::exact_nbody_evolve(5, gen, bloch_to_density({0.5, 0.2, -0.6}), 1.0, 1e-2);
    const double trace_err = std::abs(rho.matrix().trace().real() - 1.0);
    const double herm = qcore::hermiticity_defect(rho.matrix());
    std::string detail = "N=5 trace error = " + fmt(trace_err) +
                         ", Hermiticity defect = " + fmt(herm) + " (tol 1e-8)";
    return (trace_err <= 1e-8 && herm <= 1e-8) ? pass(detail) : fail(detail);
}

CheckResult check_characteristic_ordering() {
    std::mt19937_64 rng(0x1010);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        double a = unit(rng);
        double b = unit(rng);
        if (a == b) {
            continue;
        }
        if (a > b) {
            std::swap(a, b);
        }
        const double t = 10.0 * unit(rng);
        if (continuum::characteristic(a, t) >= continuum::characteristic(b, t)) {
            return fail("characteristics crossed");
        }
    }
    return pass("characteristics preserve ordering (500 random pairs)");
}

CheckResult check_support_bound() {
    const continuum::DensityGrid d0 = continuum::uniform_density(512);
    for (double t : {0.5, 2.0, 9.0}) {
        const continuum::DensityGrid dt = continuum::evolve(d0, t);
        const double edge = 1.0 / (1.0 + t);
        if (dt.x.back() > edge + 1e-15) {
            return fail("support exceeded 1/(1+t)");
        }
        if (continuum::pushforward_value(d0, edge + 1e-9, t) != 0.0) {
            return fail("density nonzero above the support hyperbola");
        }
    }
    return pass("evolved support stays below 1/(1+t)");
}

CheckResult check_cli_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "blochgas_verify";
    fs::create_directories(dir);
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };

    const std::string traj_cfg = std::string("{\"experiment\":\"MeanfieldTrajectory\",") +
                                 "\"model\":{\"kind\":\"PairDecay\",\"gamma\":1.0}," +
                                 "\"u0\":[0,0,-1],\"t_end\":1.0,\"dt\":0.001," +
                                 "\"samples\":51,\"output_path\":\"" +
                                 (dir / "traj.csv").string() + "\"}";
    const std::string mc_cfg = std::string("{\"experiment\":\"GillespieCurve\",") +
                               "\"n_atoms\":50,\"runs\":200,\"seed\":7," +
                               "\"sample_times\":[0.5,1.0],\"output_path\":\"" +
                               (dir / "mc.csv").string() + "\"}";
    const std::pair<std::string, std::size_t> cases[] = {{traj_cfg, 51}, {mc_cfg, 2}};
    for (const auto& [cfg, expected_rows] : cases) {
        const cli::ValidationResult v = cli::validate(cfg);
        if (!v.ok()) {
            return fail("verify-internal config failed validation");
        }
        if (cli::run_experiment(*v.config) != 0) {
            return fail("experiment run failed");
        }
        const fs::path out(v.config->output_path);
        const std::string first = slurp(out);
        const std::string first_meta = slurp(out.string() + ".meta.json");
        if (cli::run_experiment(*v.config) != 0) {
            return fail("experiment rerun failed");
        }
        if (slurp(out) != first || slurp(out.string() + ".meta.json") != first_meta) {
            return fail("rerun output differs byte-for-byte");
        }
        std::size_t newlines = 0;
        for (char c : first) {
            newlines += (c == '\n') ? 1 : 0;
        }
        if (newlines != expected_rows + 1) {  // header line plus one per row
            return fail("row count does not match the configured sample count");
        }
    }
    return pass("byte-identical reruns; row counts match configured samples");
}

std::vector<Check> build_acceptance() {
    return {
        {"a01", "1/t decay law (pair decay, gamma=1, dt=1e-3)", check_decay_law},
        {"a02", "parabolic decay trajectories", check_parabolas},
        {"a03", "dephasing rate interval and linear degeneration", check_dephasing_rates},
        {"a04", "hemisphere flow vs tanh closed form", check_hemisphere_flow},
        {"a05", "singlet channel reduction identity", check_singlet_identity},
        {"a06", "decay generator spectrum", check_generator_spectrum},
        {"a07", "finite-N survival converges to the continuum", check_survival_convergence},
        {"a08", "Gillespie mean vs master equation", check_cross_solver},
        {"a09", "factorization defect scaling", check_factorization},
        {"a10", "continuum exactness", check_continuum_exactness},
        {"a11", "global physicality", check_physicality},
    };
}

std::vector<Check> build_invariants() {
    return {
        {"i01", "closed Bloch fields from the generic reduction", check_closed_fields},
        {"i02", "mean-field right-hand side traceless and Hermitian", check_rhs_traceless},
        {"i03", "partial trace of product states", check_partial_trace_product},
        {"i04", "channel generator equals K - 1", check_generator_is_channel_minus_identity},
        {"i05", "integrator agrees with closed-form oracles", check_oracle_agreement},
        {"i06", "constants of motion drift", check_constants_of_motion},
        {"i07", "purity monotone under purification", check_purity_monotone},
        {"i08", "dephasing rate interval endpoints", check_rate_interval},
        {"i09", "master equation preserves probability", check_probability_preservation},
        {"i10", "decay rate span", check_rate_span},
        {"i11", "N-body trace and Hermiticity conservation", check_nbody_conservation},
        {"i12", "characteristics preserve ordering", check_characteristic_ordering},
        {"i13", "continuum support bound", check_support_bound},
        {"i14", "CLI determinism and row counts", check_cli_determinism},
    };
}

}  // namespace

const std::vector<Check>& acceptance_checks() {
    static const std::vector<Check> checks = build_acceptance();
    return checks;
}

const std::vector<Check>& invariant_checks() {
    static const std::vector<Check> checks = build_invariants();
    return checks;
}

std::vector<Check> all_checks() {
    std::vector<Check> checks = acceptance_checks();
    const std::vector<Check>& invariants = invariant_checks();
    checks.insert(checks.end(), invariants.begin(), invariants.end());
    return checks;
}

}  // namespace blochgas::verify
