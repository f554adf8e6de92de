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

#include <Eigen/Dense>

#include "blochgas/meanfield/model.hpp"
#include "blochgas/qcore/density_matrix.hpp"
#include "blochgas/qcore/kraus_channel.hpp"
#include "blochgas/qcore/operators.hpp"
#include "blochgas/qcore/pair_generator.hpp"
#include "test_util.hpp"

using namespace blochgas;
using qcore::BlochVector;
using qcore::bloch_to_density;
using qcore::Complex;
using qcore::DensityMatrix;
using qcore::density_to_bloch;
using qcore::generator_from_channel;
using qcore::generator_from_jump;
using qcore::meanfield_rhs;
using qcore::meanfield_rhs_bloch;

namespace {

Eigen::Matrix4cd singlet_projector() {
    const Eigen::Vector4cd s = qcore::singlet_ket();
    return s * s.adjoint();
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("bloch_to_density maps the reference states") {
    const Eigen::Matrix2cd north = bloch_to_density({0, 0, 1}).matrix();
    CHECK(max_abs(north - qcore::ground_projector()) < 1e-15);

    const Eigen::Matrix2cd mixed = bloch_to_density({0, 0, 0}).matrix();
    CHECK(max_abs(mixed - 0.5 * Eigen::Matrix2cd::Identity()) < 1e-15);

    Eigen::Matrix2cd plus;
    plus << 0.5, 0.5, 0.5, 0.5;
    CHECK(max_abs(bloch_to_density({1, 0, 0}).matrix() - plus) < 1e-15);
}

TEST_CASE("bloch_to_density rejects vectors outside the ball") {
    CHECK_THROWS_AS(bloch_to_density({1.1, 0, 0}), std::invalid_argument);
    CHECK_NOTHROW(bloch_to_density({1.0, 0, 0}));
}

TEST_CASE("density_to_bloch maps the reference states") {
    Eigen::Matrix2cd excited = Eigen::Matrix2cd::Zero();
    excited(1, 1) = 1.0;
    const BlochVector south = density_to_bloch(DensityMatrix::create(excited));
    CHECK(south.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(south.z == doctest::Approx(-1.0).epsilon(1e-15));

    const BlochVector center =
        density_to_bloch(DensityMatrix::create(0.5 * Eigen::Matrix2cd::Identity()));
    CHECK(center.norm() < 1e-15);

    Eigen::Matrix2cd y_state;
    y_state << Complex(0.5, 0.0), Complex(0.0, -0.5), Complex(0.0, 0.5), Complex(0.5, 0.0);
    const BlochVector u = density_to_bloch(DensityMatrix::create(y_state));
    CHECK(u.y == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(u.x) < 1e-15);
    CHECK(std::abs(u.z) < 1e-15);
}

TEST_CASE("bloch conversion round-trips to 1e-14") {
    test::BallSampler sampler;
    for (int i = 0; i < 50; ++i) {
        const BlochVector u = sampler.next();
        const BlochVector back = density_to_bloch(bloch_to_density(u));
        CHECK(qcore::max_abs_diff(u, back) < 1e-14);
    }
}

TEST_CASE("density matrix invariants are enforced") {
    Eigen::Matrix2cd not_hermitian;
    not_hermitian << 1.0, Complex(0.0, 0.5), Complex(0.0, 0.5), 0.0;
    CHECK_THROWS_AS(DensityMatrix::create(not_hermitian), std::invalid_argument);

    CHECK_THROWS_AS(DensityMatrix::create(Eigen::Matrix2cd::Identity()),
                    std::invalid_argument);

    Eigen::Matrix2cd negative;
    negative << 1.5, 0.0, 0.0, -0.5;
    CHECK_THROWS_AS(DensityMatrix::create(negative), std::invalid_argument);
}

TEST_CASE("apply_channel: identity, singlet decay, dimension checks") {
    test::BallSampler sampler;
    const auto identity = qcore::KrausChannel::identity(2);
    for (int i = 0; i < 10; ++i) {
        const DensityMatrix rho = bloch_to_density(sampler.next());
        CHECK(max_abs(apply_channel(identity, rho).matrix() - rho.matrix()) < 1e-15);
    }

    const auto chan = meanfield::singlet_channel();
    const DensityMatrix singlet = DensityMatrix::create(singlet_projector());
    const Eigen::Vector4cd g = qcore::pair_ground_ket();
    CHECK(max_abs(apply_channel(chan, singlet).matrix() - g * g.adjoint()) < 1e-14);

    const DensityMatrix ground = DensityMatrix::create(g * g.adjoint());
    CHECK(max_abs(apply_channel(chan, ground).matrix() - ground.matrix()) < 1e-14);

    CHECK_THROWS_AS(apply_channel(chan, bloch_to_density({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("kraus completeness is enforced") {
    std::vector<Eigen::MatrixXcd> bad{0.5 * Eigen::Matrix2cd::Identity()};
    CHECK_THROWS_AS(qcore::KrausChannel{bad}, std::invalid_argument);
}

TEST_CASE("channel preserves trace on random pair states") {
    std::mt19937_64 rng(7);
    const auto chan = meanfield::singlet_channel();
    for (int i = 0; i < 20; ++i) {
        const Eigen::MatrixXcd rho = test::random_density(rng, 4);
        const Eigen::MatrixXcd moved = chan.apply_raw(rho);
        CHECK(std::abs(moved.trace() - rho.trace()) < 1e-12);
    }
}

TEST_CASE("generator_from_channel: identity gives the zero generator") {
    const auto gen = generator_from_channel(qcore::KrausChannel::identity(4), 1.0);
    CHECK(gen.action().cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("generator_from_channel: singlet channel on the singlet state") {
    const auto gen = generator_from_channel(meanfield::singlet_channel(), 1.0);
    const Eigen::Vector4cd g = qcore::pair_ground_ket();
    const Eigen::Matrix4cd expected = g * g.adjoint() - singlet_projector();
    CHECK(max_abs(gen.apply(singlet_projector()) - expected) < 1e-14);
}

TEST_CASE("generator equals K - 1 for channel-built generators") {
    std::mt19937_64 rng(11);
    const auto chan = meanfield::singlet_channel();
    const auto gen = generator_from_channel(chan, 1.0);
    for (int i = 0; i < 20; ++i) {
        const Eigen::Matrix4cd sigma = test::random_density(rng, 4);
        const Eigen::Matrix4cd expected = chan.apply_raw(sigma) - sigma;
        CHECK(max_abs(gen.apply(sigma) - expected) < 1e-12);
    }
}

TEST_CASE("generator_from_jump: zero, pair decay action") {
    const auto zero = generator_from_jump(Eigen::Matrix4cd::Zero(), 1.0);
    CHECK(zero.action().cwiseAbs().maxCoeff() < 1e-15);

    const Eigen::Matrix4cd a2 = qcore::kron(qcore::annihilation(), qcore::annihilation());
    const auto gen = generator_from_jump(a2, 1.0);
    const Eigen::Matrix4cd p11 =
        qcore::kron(qcore::excited_projector(), qcore::excited_projector());
    const Eigen::Matrix4cd p00 =
        qcore::kron(qcore::ground_projector(), qcore::ground_projector());
    CHECK(max_abs(gen.apply(p11) - (p00 - p11)) < 1e-15);
    CHECK(max_abs(gen.apply(p00)) < 1e-15);
}

TEST_CASE("weak-collision Kraus pair approaches the jump generator") {
    // K1 = sqrt(2 eps) A, K2 = 1 - eps A^dag A is complete to O(eps^2); its
    // generator is 2 eps times the GKSL form built from A directly.
    const double eps = 1e-7;
    const Eigen::Matrix4cd a2 = qcore::kron(qcore::annihilation(), qcore::annihilation());
    std::vector<Eigen::MatrixXcd> ops{
        std::sqrt(2.0 * eps) * a2,
        Eigen::Matrix4cd::Identity() - eps * (a2.adjoint() * a2).eval()};
    const qcore::KrausChannel weak(ops);
    const auto from_channel = generator_from_channel(weak, 1.0);
    const auto from_jump = generator_from_jump(a2, 1.0);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
        const Eigen::Matrix4cd sigma = test::random_density(rng, 4);
        const Eigen::Matrix4cd scaled = from_channel.apply(sigma) / (2.0 * eps);
        CHECK(max_abs(scaled - from_jump.apply(sigma)) < 1e-6);
    }
}

TEST_CASE("pair generators annihilate the trace") {
    std::mt19937_64 rng(17);
    const auto models = {meanfield::ModelSpec::pair_decay(1.0),
                         meanfield::ModelSpec::pair_dephasing(0.7, 1.0),
                         meanfield::ModelSpec::singlet_purification()};
    for (const auto& model : models) {
        const auto gen = model_pair_generator(model);
        CHECK(gen.trace_annihilation_defect() < 1e-12);
        for (int i = 0; i < 5; ++i) {
            const Eigen::Matrix4cd sigma = test::random_density(rng, 4);
            CHECK(std::abs(gen.apply(sigma).trace()) < 1e-12);
        }
    }
}

TEST_CASE("partial_trace_second: products, singlet, ground pair") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 10; ++i) {
        const Eigen::Matrix2cd rho = test::random_density(rng, 2);
        const Eigen::Matrix2cd sigma = test::random_density(rng, 2);
        const Eigen::MatrixXcd reduced = qcore::ptrace_trailing(qcore::kron(rho, sigma), 2);
        CHECK(max_abs(reduced - rho) < 1e-14);
    }

    const DensityMatrix singlet = DensityMatrix::create(singlet_projector());
    CHECK(max_abs(partial_trace_second(singlet).matrix() -
                  0.5 * Eigen::Matrix2cd::Identity()) < 1e-15);

    const Eigen::Vector4cd g = qcore::pair_ground_ket();
    const DensityMatrix ground = DensityMatrix::create(g * g.adjoint());
    CHECK(max_abs(partial_trace_second(ground).matrix() - qcore::ground_projector()) <
          1e-15);

    CHECK_THROWS_AS(partial_trace_second(bloch_to_density({0, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("meanfield_rhs frozen examples") {
    const auto zero = generator_from_jump(Eigen::Matrix4cd::Zero(), 1.0);
    CHECK(max_abs(meanfield_rhs(zero, bloch_to_density({0.3, -0.1, 0.2}))) < 1e-15);

    // Maximally mixed state under the singlet channel: det(rho) = 1/4, so the
    // right-hand side is sigma_z / 8.
    const auto singlet_gen =
        model_pair_generator(meanfield::ModelSpec::singlet_purification());
    const Eigen::Matrix2cd rhs = meanfield_rhs(singlet_gen, bloch_to_density({0, 0, 0}));
    CHECK(max_abs(rhs - 0.125 * qcore::pauli_z()) < 1e-14);

    // Fully excited state under pair decay: Bloch derivative (0, 0, 2).
    const auto decay_gen = model_pair_generator(meanfield::ModelSpec::pair_decay(1.0));
    const BlochVector dot = meanfield_rhs_bloch(decay_gen, {0, 0, -1});
    CHECK(std::abs(dot.x) < 1e-14);
    CHECK(std::abs(dot.y) < 1e-14);
    CHECK(dot.z == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("singlet channel reduction equals (det rho / 2) sigma_z") {
    test::BallSampler sampler(0x51e7);
    const auto gen = model_pair_generator(meanfield::ModelSpec::singlet_purification());
    for (int i = 0; i < 100; ++i) {
        const BlochVector u = sampler.next();
        const DensityMatrix rho = bloch_to_density(u);
        const Complex det = rho.matrix().determinant();
        const Eigen::Matrix2cd expected = 0.5 * det.real() * qcore::pauli_z();
        CHECK(max_abs(meanfield_rhs(gen, rho) - expected) < 1e-12);
    }
}

TEST_CASE("decay reduction reproduces the closed Bloch field") {
    test::BallSampler sampler(0xdecabull);
    const double gamma = 1.3;
    const auto gen = model_pair_generator(meanfield::ModelSpec::pair_decay(gamma));
    for (int i = 0; i < 100; ++i) {
        const BlochVector u = sampler.next();
        const BlochVector dot = meanfield_rhs_bloch(gen, u);
        const double eff = gamma * (1.0 - u.z) / 2.0;
        CHECK(std::abs(dot.x + 0.5 * eff * u.x) < 1e-12);
        CHECK(std::abs(dot.y + 0.5 * eff * u.y) < 1e-12);
        CHECK(std::abs(dot.z + eff * (u.z - 1.0)) < 1e-12);
    }
}

TEST_CASE("dephasing reduction reproduces the closed Bloch field") {
    test::BallSampler sampler(0xdef5);
    const double gamma = 0.8;
    const double theta = 0.6;
    const auto gen =
        model_pair_generator(meanfield::ModelSpec::pair_dephasing(theta, gamma));
    for (int i = 0; i < 100; ++i) {
        const BlochVector u = sampler.next();
        const BlochVector dot = meanfield_rhs_bloch(gen, u);
        const double g = meanfield::dephasing_rate(theta, gamma, u.z);
        CHECK(std::abs(dot.x + g * u.x) < 1e-12);
        CHECK(std::abs(dot.y + g * u.y) < 1e-12);
        CHECK(std::abs(dot.z) < 1e-12);
    }
}

TEST_CASE("meanfield_rhs is traceless and Hermitian") {
    test::BallSampler sampler(0x7ace);
    const auto models = {meanfield::ModelSpec::pair_decay(2.0),
                         meanfield::ModelSpec::pair_dephasing(1.1, 0.5),
                         meanfield::ModelSpec::singlet_purification()};
    for (const auto& model : models) {
        const auto gen = model_pair_generator(model);
        for (int i = 0; i < 30; ++i) {
            const Eigen::Matrix2cd rhs = meanfield_rhs(gen, bloch_to_density(sampler.next()));
            CHECK(std::abs(rhs.trace()) < 1e-12);
            CHECK(qcore::hermiticity_defect(rhs) < 1e-12);
        }
    }
}

TEST_CASE("model generators are swap symmetric") {
    CHECK(model_pair_generator(meanfield::ModelSpec::pair_decay(1.0)).swap_symmetric());
    CHECK(model_pair_generator(meanfield::ModelSpec::pair_dephasing(0.9, 1.0))
              .swap_symmetric());
    CHECK(model_pair_generator(meanfield::ModelSpec::singlet_purification())
              .swap_symmetric());
}
