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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "blochgas/ensemble/gillespie.hpp"
#include "blochgas/ensemble/master.hpp"
#include "blochgas/ensemble/nbody.hpp"
#include "blochgas/ensemble/rng.hpp"
#include "blochgas/meanfield/closed_form.hpp"
#include "blochgas/meanfield/integrate.hpp"
#include "blochgas/meanfield/model.hpp"
#include "blochgas/qcore/operators.hpp"
#include "test_util.hpp"

using namespace blochgas;
using namespace blochgas::ensemble;
using qcore::BlochVector;
using qcore::bloch_to_density;
using qcore::DensityMatrix;

namespace {

qcore::PairGenerator decay_generator(double gamma = 1.0) {
    return model_pair_generator(meanfield::ModelSpec::pair_decay(gamma));
}

}  // namespace

TEST_CASE("build_generator: N = 2 and N = 4 reference matrices") {
    const DecayGenerator g2 = build_generator(2, 1.0);
    CHECK(g2.matrix(0, 0) == 0.0);
    CHECK(g2.matrix(0, 1) == -1.0);
    CHECK(g2.matrix(1, 0) == 0.0);
    CHECK(g2.matrix(1, 1) == 1.0);

    const DecayGenerator g4 = build_generator(4, 1.0);
    CHECK(g4.matrix(0, 0) == 0.0);
    CHECK(g4.matrix(1, 1) == 1.0);
    CHECK(g4.matrix(2, 2) == 6.0);
    CHECK(g4.matrix(0, 1) == -1.0);
    CHECK(g4.matrix(1, 2) == -6.0);
    CHECK(g4.matrix(2, 0) == 0.0);
    CHECK(g4.matrix(2, 1) == 0.0);
}

TEST_CASE("build_generator rejects odd or tiny atom counts") {
    CHECK_THROWS_AS(build_generator(3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_generator(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_generator(2, 0.0), std::invalid_argument);
}

TEST_CASE("generator columns sum to zero and the spectrum reads off the diagonal") {
    const double gamma = 1.25;
    for (int n_atoms : {2, 4, 10, 100}) {
        const DecayGenerator gen = build_generator(n_atoms, gamma);
        for (int col = 0; col < gen.levels(); ++col) {
            CHECK(gen.matrix.col(col).sum() == 0.0);
            // Triangular matrix: eigenvalues are exactly the diagonal.
            CHECK(gen.matrix(col, col) == gamma * col * (2.0 * col - 1.0));
        }
        // Nonzero rates of G/N span gamma/N .. gamma (N-1)/2.
        CHECK(gen.rate(1) / n_atoms == gamma / n_atoms);
        CHECK(gen.rate(gen.levels() - 1) / n_atoms ==
              doctest::Approx(gamma * (n_atoms - 1) / 2.0).epsilon(1e-15));
    }
}

TEST_CASE("evolve_master: identity at t = 0 and full relaxation at late times") {
    const DecayGenerator gen = build_generator(6, 1.0);
    const EnsembleState p0 = EnsembleState::delta(6, 3);
    const EnsembleState same = evolve_master(gen, p0, 0.0);
    CHECK((same.probs - p0.probs).cwiseAbs().maxCoeff() < 1e-14);

    const EnsembleState late = evolve_master(gen, p0, 1e4);
    CHECK(late.probs(0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("evolve_master: two atoms decay as exp(-t/2)") {
    const DecayGenerator gen = build_generator(2, 1.0);
    const EnsembleState p0 = EnsembleState::delta(2, 1);
    for (double t : {0.3, 1.0, 4.0}) {
        const EnsembleState p = evolve_master(gen, p0, t);
        CHECK(p.probs(1) == doctest::Approx(std::exp(-0.5 * t)).epsilon(1e-13));
    }
}

TEST_CASE("master equation preserves probability at all sampled times") {
    for (int n_atoms : {16, 64, 256, 1000}) {
        const DecayGenerator gen = build_generator(n_atoms, 1.0);
        const MasterPropagator prop(gen, EnsembleState::delta(n_atoms, n_atoms / 2));
        for (double t = 0.0; t <= 10.0; t += 1.0) {
            const EnsembleState p = prop.at(t);
            CHECK(p.probs.minCoeff() > -1e-12);
            CHECK(std::abs(p.probs.sum() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("propagator switches to dense integration when cancellation bites") {
    const MasterPropagator small(build_generator(16, 1.0), EnsembleState::delta(16, 8));
    CHECK_FALSE(small.used_fallback());
    const MasterPropagator large(build_generator(256, 1.0), EnsembleState::delta(256, 128));
    CHECK(large.used_fallback());
    MESSAGE("condition estimates: N=16 ", small.condition_estimate(), ", N=256 ",
            large.condition_estimate());
}

TEST_CASE("dense fallback route agrees with the eigen expansion") {
    for (int n_atoms : {8, 32}) {
        const DecayGenerator gen = build_generator(n_atoms, 1.0);
        const EnsembleState p0 = EnsembleState::delta(n_atoms, n_atoms / 2);
        for (double t : {0.3, 2.0}) {
            const EnsembleState exact = evolve_master(gen, p0, t);
            const EnsembleState dense = evolve_master_dense(gen, p0, t);
            CHECK((exact.probs - dense.probs).cwiseAbs().maxCoeff() < 1e-6);
        }
    }
}

TEST_CASE("excited_fraction reference values") {
    EnsembleState ground = EnsembleState::delta(10, 0);
    CHECK(excited_fraction(ground) == 0.0);
    EnsembleState full = EnsembleState::delta(10, 5);
    CHECK(excited_fraction(full) == 1.0);

    const DecayGenerator gen = build_generator(2, 1.0);
    const EnsembleState p = evolve_master(gen, EnsembleState::delta(2, 1), 2.0);
    CHECK(excited_fraction(p) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("ensemble state validation") {
    EnsembleState bad;
    bad.n_atoms = 4;
    bad.probs = Eigen::Vector3d(0.5, 0.6, 0.2);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.probs = Eigen::Vector3d(-0.1, 0.9, 0.2);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("gillespie: no excited atoms means no events") {
    McConfig cfg;
    cfg.n_atoms = 10;
    cfg.runs = 20;
    cfg.seed = 1;
    cfg.sample_times = {0.5, 1.0, 2.0};
    const McSamples samples = gillespie_decay(cfg, 0);
    for (int r = 0; r < cfg.runs; ++r) {
        for (std::size_t j = 0; j < samples.times.size(); ++j) {
            CHECK(samples.at(r, j) == 0.0);
        }
    }
}

TEST_CASE("gillespie: single pair survives with probability exp(-t/2)") {
    McConfig cfg;
    cfg.n_atoms = 2;
    cfg.runs = 20000;
    cfg.seed = 99;
    cfg.sample_times = {0.5, 1.0, 2.0};
    const McSamples samples = gillespie_decay(cfg, 2);
    for (std::size_t j = 0; j < samples.times.size(); ++j) {
        const double expected = std::exp(-0.5 * samples.times[j]);
        const double err = std::max(samples.std_error(j), 1e-6);
        CHECK(std::abs(samples.mean(j) - expected) < 3.5 * err);
    }
}

TEST_CASE("gillespie mean tracks the master equation within 3 standard errors") {
    McConfig cfg;
    cfg.n_atoms = 50;
    cfg.runs = 4000;
    cfg.seed = 2024;
    cfg.sample_times = {0.5, 1.0, 2.0, 5.0};
    const McSamples samples = gillespie_decay(cfg, 50);

    const DecayGenerator gen = build_generator(50, 1.0);
    const MasterPropagator prop(gen, EnsembleState::delta(50, 25));
    for (std::size_t j = 0; j < samples.times.size(); ++j) {
        const double reference = excited_fraction(prop.at(samples.times[j]));
        CHECK(std::abs(samples.mean(j) - reference) < 3.0 * samples.std_error(j));
    }
}

TEST_CASE("gillespie results are identical for any thread count") {
    McConfig cfg;
    cfg.n_atoms = 40;
    cfg.runs = 500;
    cfg.seed = 7;
    cfg.sample_times = {0.2, 1.0, 3.0};
    const McSamples serial = gillespie_decay(cfg, 40, 1);
    const McSamples parallel = gillespie_decay(cfg, 40, 4);
    CHECK(serial.fractions == parallel.fractions);

    const McSamples again = gillespie_decay(cfg, 40, 1);
    CHECK(serial.fractions == again.fractions);
}

TEST_CASE("gillespie validates its inputs") {
    McConfig cfg;
    cfg.n_atoms = 10;
    cfg.runs = 5;
    cfg.sample_times = {1.0};
    CHECK_THROWS_AS(gillespie_decay(cfg, 3), std::invalid_argument);   // odd m0
    CHECK_THROWS_AS(gillespie_decay(cfg, 12), std::invalid_argument);  // m0 > N
    cfg.sample_times = {2.0, 1.0};
    CHECK_THROWS_AS(gillespie_decay(cfg, 4), std::invalid_argument);   // not ascending
}

TEST_CASE("counter rng streams are reproducible and distinct") {
    CounterRng a(42, 0);
    CounterRng b(42, 0);
    CounterRng c(42, 1);
    bool all_equal = true;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next_u64();
        const auto vb = b.next_u64();
        const auto vc = c.next_u64();
        CHECK(va == vb);
        all_equal = all_equal && (va == vc);
    }
    CHECK_FALSE(all_equal);
}

TEST_CASE("exact N-body: two-atom pair population decays as exp(-t/2)") {
    const DensityMatrix rho0 = bloch_to_density({0, 0, -1});
    for (double t : {0.5, 1.0}) {
        const DensityMatrix rho = exact_nbody_evolve(2, decay_generator(), rho0, t, 1e-3);
        const double p11 = rho.matrix()(3, 3).real();
        CHECK(std::abs(p11 - std::exp(-0.5 * t)) < 1e-8);
    }
}

TEST_CASE("exact N-body: ground product state is stationary") {
    const DensityMatrix rho0 = bloch_to_density({0, 0, 1});
    const DensityMatrix rho = exact_nbody_evolve(3, decay_generator(), rho0, 2.0, 1e-2);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(8, 8);
    expected(0, 0) = 1.0;
    CHECK((rho.matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("exact N-body matches the symmetric master equation at N = 4") {
    const DensityMatrix rho0 = bloch_to_density({0, 0, -1});
    const double t = 0.7;
    const DensityMatrix rho = exact_nbody_evolve(4, decay_generator(), rho0, t, 5e-3);

    // Group diagonal populations by excitation number.
    double by_count[5] = {0, 0, 0, 0, 0};
    for (int b = 0; b < 16; ++b) {
        by_count[std::popcount(static_cast<unsigned>(b))] += rho.matrix()(b, b).real();
    }
    CHECK(std::abs(by_count[1]) < 1e-10);
    CHECK(std::abs(by_count[3]) < 1e-10);

    const EnsembleState p =
        evolve_master(build_generator(4, 1.0), EnsembleState::delta(4, 2), t);
    CHECK(std::abs(by_count[0] - p.probs(0)) < 1e-7);
    CHECK(std::abs(by_count[2] - p.probs(1)) < 1e-7);
    CHECK(std::abs(by_count[4] - p.probs(2)) < 1e-7);
}

TEST_CASE("exact N-body conserves trace and Hermiticity to 1e-8") {
    const DensityMatrix rho0 = bloch_to_density({0.5, 0.2, -0.6});
    const DensityMatrix rho = exact_nbody_evolve(5, decay_generator(), rho0, 1.0, 1e-2);
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-8);
    CHECK(qcore::hermiticity_defect(rho.matrix()) < 1e-8);
}

TEST_CASE("exact N-body rejects bad inputs") {
    const DensityMatrix rho0 = bloch_to_density({0, 0, -1});
    CHECK_THROWS_AS(exact_nbody_evolve(9, decay_generator(), rho0, 1.0, 1e-2),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_nbody_evolve(1, decay_generator(), rho0, 1.0, 1e-2),
                    std::invalid_argument);

    // One-sided jump operator is not swap symmetric.
    const Eigen::Matrix4cd lop =
        qcore::kron(qcore::annihilation(), Eigen::Matrix2cd::Identity());
    const auto asym = qcore::generator_from_jump(lop, 1.0);
    CHECK_THROWS_AS(exact_nbody_evolve(4, asym, rho0, 1.0, 1e-2), std::invalid_argument);
}

TEST_CASE("factorization defect vanishes on product initial data") {
    const BlochVector u0{0.5, 0.0, -0.5};
    const DensityMatrix rho0 = bloch_to_density(u0);
    const DensityMatrix rho_n = exact_nbody_evolve(4, decay_generator(), rho0, 0.0, 1e-2);
    CHECK(factorization_defect(rho_n, rho0) < 1e-12);
}

TEST_CASE("factorization defect shrinks from N = 4 to N = 6") {
    const BlochVector u0{0.5, 0.0, -0.5};
    const DensityMatrix rho0 = bloch_to_density(u0);
    const meanfield::Trajectory mf =
        meanfield::integrate(meanfield::ModelSpec::pair_decay(1.0), u0, 1.0, 1e-3);
    const DensityMatrix rho_mf = bloch_to_density(mf.states.back());

    const double d4 = factorization_defect(
        exact_nbody_evolve(4, decay_generator(), rho0, 1.0, 1e-2), rho_mf);
    const double d6 = factorization_defect(
        exact_nbody_evolve(6, decay_generator(), rho0, 1.0, 1e-2), rho_mf);
    MESSAGE("defect(4) = ", d4, ", defect(6) = ", d6);
    CHECK(d4 > 0.0);
    CHECK(d6 < d4);
}

TEST_CASE("finite-N survival converges monotonically to the continuum curve") {
    // Continuum mean for a point mass at x = 1 is 1/(1+t).
    double previous = 1e9;
    for (int n_atoms : {16, 64, 256}) {
        const DecayGenerator gen = build_generator(n_atoms, 1.0);
        const MasterPropagator prop(gen, EnsembleState::delta(n_atoms, n_atoms / 2));
        double sup = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double t = 10.0 * i / 200.0;
            const double deviation =
                std::abs(excited_fraction(prop.at(t)) - 1.0 / (1.0 + t));
            sup = std::max(sup, deviation);
        }
        MESSAGE("sup deviation at N=", n_atoms, ": ", sup);
        CHECK(sup < previous);
        previous = sup;
    }
}
