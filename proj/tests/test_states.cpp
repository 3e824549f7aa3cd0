// Copyright 2026 The properclock developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "properclock/states.hpp"

using namespace properclock;

TEST_CASE("packet validation") {
    CHECK_THROWS_AS(GaussianPacket(0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GaussianPacket(0.1, -0.01), std::invalid_argument);
    const GaussianPacket g(0.1, 0.02);
    CHECK(g.pbar.x() == 0.1);
    CHECK(g.pbar.y() == 0.0);
}

TEST_CASE("kinetic energy of a packet") {
    const GaussianPacket g(0.1, 0.02);
    CHECK(kinetic_energy_mean(g, 1.0) == doctest::Approx(0.0051).epsilon(1e-12));
    const GaussianPacket rest(0.0, 0.02);
    CHECK(kinetic_energy_mean(rest, 1.0) == doctest::Approx(0.0001).epsilon(1e-12));
}

TEST_CASE("packet overlap") {
    const GaussianPacket a(0.0, 0.01), b(0.02, 0.01);
    CHECK(packet_overlap(a, a) == doctest::Approx(1.0));
    CHECK(packet_overlap(a, b) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    const GaussianPacket c(0.0, 0.02);
    CHECK_THROWS_AS(packet_overlap(a, c), std::invalid_argument);
}

TEST_CASE("superposition norm and validation") {
    const double pi = std::numbers::pi;
    const GaussianPacket a(0.0, 0.01), b(0.02, 0.01);
    const MomentumSuperposition sup(a, b, pi / 4.0, 0.0);
    const double lambda = std::exp(-1.0);
    CHECK(sup.norm == doctest::Approx(std::sqrt(1.0 + lambda)).epsilon(1e-14));
    CHECK_THROWS_AS(MomentumSuperposition(a, b, -0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(MomentumSuperposition(a, b, pi, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(MomentumSuperposition(a, b, 0.3, pi + 0.1), std::invalid_argument);
    const GaussianPacket c(0.02, 0.02);
    CHECK_THROWS_AS(MomentumSuperposition(a, c, 0.3, 0.0), std::invalid_argument);
}

TEST_CASE("superposition kinetic energy includes interference") {
    const double pi = std::numbers::pi;
    const GaussianPacket a(0.0, 0.01), b(0.02, 0.01);
    const MomentumSuperposition sup(a, b, pi / 4.0, 0.0);
    const double lambda = std::exp(-1.0);
    const double mid2 = 0.01 * 0.01;
    const double direct = 0.5 * (0.0 + 0.5e-4) + 0.5 * (4e-4 + 0.5e-4);
    const double cross = lambda * (mid2 + 0.5e-4);
    const double expected = 0.5 * (direct + cross) / (1.0 + lambda);
    CHECK(kinetic_energy_mean(sup, 1.0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("scenario invariants") {
    const GaussianPacket a(0.05, 0.01), b(0.0, 0.01);
    CHECK_THROWS_AS(Scenario(1.0, a, b, ClockFiducial(1.0), ClockFiducial(2.0)),
                    std::invalid_argument);
    const Scenario s(1.0, a, b, ClockFiducial(1.5), ClockFiducial(1.5));
    CHECK(s.sigma() == 1.5);
}
