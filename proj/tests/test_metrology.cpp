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

#include "properclock/metrology.hpp"

using namespace properclock;

namespace {
constexpr double kPi = std::numbers::pi;
const TwoLevelFiducial kPlus = TwoLevelFiducial(1.0, 1.0) / std::sqrt(2.0);
}  // namespace

TEST_CASE("povm weight comes out as omega over pi") {
    CHECK(derive_two_level_mu(1.0) == doctest::Approx(1.0 / kPi).epsilon(1e-12));
    CHECK(derive_two_level_mu(3.5) == doctest::Approx(3.5 / kPi).epsilon(1e-12));
}

TEST_CASE("completeness") {
    const TwoLevelClock tl = make_two_level(1.0);
    CHECK(povm_completeness(ClockModel{tl}, 4096) < 1e-9);
    TwoLevelClock doubled = tl;
    doubled.mu *= 2.0;
    CHECK(povm_completeness(ClockModel{doubled}, 4096) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(povm_completeness(ClockModel{IdealContinuousClock{1.0}}, 1024) < 1e-12);
}

TEST_CASE("covariance under shifts") {
    const ClockModel tl{make_two_level(2.0)};
    CHECK(covariance_check(tl, 0.0, 512) < 1e-13);
    CHECK(covariance_check(tl, kPi / 4.0, 512) < 1e-12);
    CHECK(covariance_check(tl, kPi, 512) < 1e-12);  // full period at omega = 2
    const ClockModel ic{IdealContinuousClock{1.0}};
    CHECK(covariance_check(ic, 16.0 * 4.0 / 1024.0, 1024) < 1e-12);
}

TEST_CASE("theorem 1 for the continuous clock") {
    const IdealContinuousClock model{1.0};
    const ContinuousFiducial gauss = gaussian_fiducial(1.0);
    const Theorem1Result at_zero = theorem1_check(model, gauss, 0.0);
    CHECK(std::abs(at_zero.bias) < 1e-10);
    CHECK(std::abs(at_zero.variance_drift) < 1e-10);
    for (double tau : {0.7, 3.0}) {
        const Theorem1Result r = theorem1_check(model, gauss, tau);
        CHECK(std::abs(r.bias) < 1e-8);
        CHECK(std::abs(r.variance_drift) < 1e-8);
    }
    // off-center fiducial rejected
    ContinuousFiducial shifted = gauss;
    shifted.psi = [&gauss](double tau) { return gauss.psi(tau - 1.0); };
    shifted.dpsi = [&gauss](double tau) { return gauss.dpsi(tau - 1.0); };
    shifted.extent = gauss.extent + 1.0;
    CHECK_THROWS_AS(theorem1_check(model, shifted, 0.5), std::invalid_argument);
}

TEST_CASE("fisher information two ways") {
    const IdealContinuousClock model{0.5};
    const FisherResult fg = fisher_information(model, gaussian_fiducial(0.5));
    CHECK(fg.four_var_h == doctest::Approx(2.0 / 0.25).epsilon(1e-10));
    CHECK(fg.classical == doctest::Approx(fg.four_var_h).epsilon(1e-6));

    const TwoLevelClock tl = make_two_level(1.7);
    const FisherResult ft = fisher_information(tl, kPlus);
    CHECK(ft.four_var_h == doctest::Approx(4.0 * 1.7 * 1.7).epsilon(1e-12));
    CHECK(ft.classical == doctest::Approx(ft.four_var_h).epsilon(1e-6));
}

TEST_CASE("helstrom bound") {
    const IdealContinuousClock model{1.0};
    const HelstromResult hg = helstrom_bound_check(model, gaussian_fiducial(1.0));
    CHECK(hg.var_t == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(hg.bound == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(hg.mass_time_product == doctest::Approx(0.5).epsilon(1e-9));

    const HelstromResult hh = helstrom_bound_check(model, two_hump_fiducial(1.0, 6.0));
    CHECK(hh.var_t > hh.bound * 1.5);

    const HelstromResult ht = helstrom_bound_check(make_two_level(1.0), kPlus);
    CHECK(ht.var_t >= ht.bound - 1e-12);
}

TEST_CASE("orthogonality time") {
    const TwoLevelClock tl = make_two_level(1.0);
    const auto t_perp = orthogonality_time(tl, kPlus);
    REQUIRE(t_perp.has_value());
    CHECK(*t_perp == doctest::Approx(kPi / 2.0).epsilon(1e-9));
    const double delta_h = 1.0;  // sqrt(Var H) for the plus state at omega = 1
    CHECK(*t_perp * 2.0 * delta_h == doctest::Approx(kPi).epsilon(1e-9));

    const TwoLevelFiducial ground(1.0, 0.0);
    CHECK_FALSE(orthogonality_time(tl, ground).has_value());
}
