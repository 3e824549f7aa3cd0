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

#pragma once

#include <vector>

#include "properclock/states.hpp"

namespace properclock {

/// Classical (mixture) and quantum (interference) parts of the mean
/// dilation factor of a superposed clock relative to a reference clock.
struct DilationFactors {
    double gamma_c_inv = 0.0;
    double gamma_q_inv = 0.0;
    double total() const { return gamma_c_inv + gamma_q_inv; }
};

/// Leading-order ratio tau_A/tau_B together with the exact
/// special-relativistic value gamma_B/gamma_A.
struct ClassicalDilation {
    double leading_order;
    double exact;
};

/// Sampled conditional proper-time density P[T_A = tau_A | T_B = tau_B]
/// over a tau_A grid, with trapezoidal moments.
struct ConditionalDistribution {
    double tau_b;
    std::vector<double> tau_grid;
    std::vector<double> density;
    double mean;      ///< first moment of the sampled density
    double variance;  ///< second central moment about `mean`
};

/// Conditional proper-time density at leading relativistic order.
///
/// Energies h_a, h_b are the mean non-relativistic kinetic energies in
/// units of mc^2 (pass mass_c2 = mass in natural units). The returned
/// value is the closed-form leading-order expression and may dip below
/// zero in far tails; see validity_radius().
double conditional_density(double tau_a, double tau_b, double sigma, double h_a, double h_b,
                           double mass_c2 = 1.0);

/// Mean clock-A reading conditioned on clock B reading tau_b:
/// (1 - (h_a - h_b)/mc^2) tau_b.
double mean_tau(double tau_b, double h_a, double h_b, double mass_c2 = 1.0);

/// Spread of the conditional reading: (1 - (h_a - h_b)/mc^2) sigma^2.
double variance_tau(double sigma, double h_a, double h_b, double mass_c2 = 1.0);

/// |tau_a - tau_b| beyond which the leading-order density can turn
/// negative, roughly sigma * sqrt(2 mc^2 / |h_a - h_b|). Infinite when
/// the energies coincide.
double validity_radius(double sigma, double h_a, double h_b, double mass_c2 = 1.0);

ClassicalDilation classical_dilation(const Eigen::Vector3d& pbar_a, const Eigen::Vector3d& pbar_b,
                                     double mass);

/// Classical and quantum dilation factors of a superposed clock A
/// against a localized clock B.
DilationFactors dilation_factors(const MomentumSuperposition& sup, const GaussianPacket& cm_b,
                                 double mass);

/// Samples the closed-form density on a uniform grid [lo, hi] of n points.
ConditionalDistribution sample_conditional(double tau_b, double sigma, double h_a, double h_b,
                                           double lo, double hi, int n, double mass_c2 = 1.0);

}  // namespace properclock
