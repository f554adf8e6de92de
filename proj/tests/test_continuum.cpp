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

#include <cmath>
#include <random>

#include "blochgas/continuum/distribution.hpp"
#include "blochgas/ensemble/master.hpp"
#include "blochgas/meanfield/closed_form.hpp"

using namespace blochgas;
using namespace blochgas::continuum;

namespace {

PointMasses point_mass_at(double x0) {
    PointMasses d;
    d.x = {x0};
    d.w = {1.0};
    return d;
}

}  // namespace

TEST_CASE("characteristic curve reference values") {
    CHECK(characteristic(0.0, 5.0) == 0.0);
    CHECK(characteristic(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(characteristic(0.5, 2.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(characteristic(1.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(characteristic(0.5, -1.0), std::invalid_argument);
}

TEST_CASE("characteristics preserve ordering") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double a = unit(rng);
        double b = unit(rng);
        if (a == b) {
            continue;
        }
        if (a > b) {
            std::swap(a, b);
        }
        const double t = 10.0 * unit(rng);
        CHECK(characteristic(a, t) < characteristic(b, t));
    }
}

TEST_CASE("evolution at t = 0 is the identity") {
    const DensityGrid d0 = uniform_density(256);
    const DensityGrid same = evolve(d0, 0.0);
    CHECK(same.x == d0.x);
    CHECK(same.p == d0.p);

    const PointMasses m0 = point_mass_at(0.7);
    const PointMasses msame = evolve(m0, 0.0);
    CHECK(msame.x == m0.x);
}

TEST_CASE("point mass launched from x = 1 rides the hyperbola") {
    const PointMasses d0 = point_mass_at(1.0);
    const PointMasses d3 = evolve(d0, 3.0);
    CHECK(d3.x[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d3.w[0] == 1.0);
    CHECK(mean_excited(Distribution(d3)) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("uniform initial density maps to (1-x)^-2 below the support edge") {
    const DensityGrid d0 = uniform_density(2048);
    const DensityGrid d1 = evolve(d0, 1.0);
    d1.validate();

    // Support is [0, 1/2] at t = 1 and the moved grid ends exactly there.
    CHECK(d1.x.back() == doctest::Approx(0.5).epsilon(1e-15));
    for (std::size_t i = 0; i < d1.x.size(); ++i) {
        const double x = d1.x[i];
        const double expected = 1.0 / ((1.0 - x) * (1.0 - x));
        CHECK(d1.p[i] == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(std::abs(d1.mass() - 1.0) < 1e-6);

    // The fixed-location evaluator agrees and vanishes above the edge.
    for (double x : {0.1, 0.3, 0.49}) {
        const double expected = 1.0 / ((1.0 - x) * (1.0 - x));
        CHECK(pushforward_value(d0, x, 1.0) == doctest::Approx(expected).epsilon(1e-9));
    }
    CHECK(pushforward_value(d0, 0.51, 1.0) == 0.0);
    CHECK(pushforward_value(d0, 0.9, 1.0) == 0.0);
}

TEST_CASE("pushforward guards the x t = 1 singularity") {
    const DensityGrid d0 = uniform_density(64);
    CHECK(pushforward_value(d0, 1.0, 1.0) == 0.0);
    CHECK(pushforward_value(d0, 0.5, 2.0) == 0.0);
}

TEST_CASE("mass is conserved for smooth initial data") {
    const DensityGrid d0 =
        density_from_function([](double x) { return 6.0 * x * (1.0 - x); }, 2048);
    CHECK(std::abs(d0.mass() - 1.0) < 1e-12);
    for (double t : {0.0, 1.0, 5.0}) {
        const DensityGrid dt = evolve(d0, t);
        CHECK(std::abs(dt.mass() - 1.0) < 1e-6);
        for (double v : dt.p) {
            CHECK(v >= 0.0);
        }
    }
}

TEST_CASE("evolved density support stays below 1/(1+t)") {
    const DensityGrid d0 = uniform_density(512);
    for (double t : {0.5, 2.0, 9.0}) {
        const DensityGrid dt = evolve(d0, t);
        const double edge = 1.0 / (1.0 + t);
        CHECK(dt.x.back() <= edge + 1e-15);
        CHECK(evaluate(dt, edge + 1e-6) == 0.0);
    }
}

TEST_CASE("semigroup property of the pushforward") {
    const PointMasses d0 = [] {
        PointMasses d;
        d.x = {0.1, 0.5, 0.75, 1.0};
        d.w = {0.25, 0.25, 0.25, 0.25};
        return d;
    }();
    const PointMasses two_steps = evolve(evolve(d0, 1.25), 2.5);
    const PointMasses one_step = evolve(d0, 3.75);
    for (std::size_t i = 0; i < d0.x.size(); ++i) {
        CHECK(std::abs(two_steps.x[i] - one_step.x[i]) < 1e-14);
    }
    CHECK(two_steps.time == doctest::Approx(3.75).epsilon(1e-15));

    const DensityGrid g0 = uniform_density(256);
    const DensityGrid g_two = evolve(evolve(g0, 0.5), 1.5);
    const DensityGrid g_one = evolve(g0, 2.0);
    for (std::size_t i = 0; i < g0.x.size(); ++i) {
        CHECK(std::abs(g_two.x[i] - g_one.x[i]) < 1e-14);
        CHECK(std::abs(g_two.p[i] - g_one.p[i]) < 1e-10 * (1.0 + g_one.p[i]));
    }
}

TEST_CASE("mean of the evolved delta equals the 1/t decay law") {
    // A point mass at x = 1 is the fully excited ensemble; under the
    // identification 2x = 1 - u_z its mean must match the mean-field law.
    for (double t : {0.5, 1.0, 4.0, 20.0}) {
        const double mean = mean_excited(Distribution(evolve(point_mass_at(1.0), t)));
        CHECK(mean == doctest::Approx(1.0 / (1.0 + t)).epsilon(1e-14));
        const double uz = meanfield::decay_uz_exact(-1.0, 1.0, t);
        CHECK(std::abs(2.0 * mean - (1.0 - uz)) < 1e-14);
    }
}

TEST_CASE("continuum mean matches the N = 256 master curve within its envelope") {
    const ensemble::DecayGenerator gen = ensemble::build_generator(256, 1.0);
    const ensemble::MasterPropagator prop(gen, ensemble::EnsembleState::delta(256, 128));
    double sup = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double t = 10.0 * i / 100.0;
        const double continuum_mean =
            mean_excited(Distribution(evolve(point_mass_at(1.0), t)));
        sup = std::max(sup,
                       std::abs(continuum_mean - excited_fraction(prop.at(t))));
    }
    // Finite-size deviation of the N = 64 curve bounds the N = 256 one.
    CHECK(sup < 0.0033);
}

TEST_CASE("distribution validation catches bad data") {
    DensityGrid bad;
    bad.x = {0.0, 0.5, 1.0};
    bad.p = {1.0, -0.2, 1.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    PointMasses masses;
    masses.x = {0.2, 0.8};
    masses.w = {0.5, 0.6};
    CHECK_THROWS_AS(masses.validate(), std::invalid_argument);

    PointMasses outside;
    outside.x = {1.5};
    outside.w = {1.0};
    CHECK_THROWS_AS(outside.validate(), std::invalid_argument);
}
