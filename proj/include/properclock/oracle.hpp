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

#include "properclock/quadrature.hpp"
#include "properclock/states.hpp"

namespace properclock {

/// Discretization of the clock (tau) and center-of-mass (p) spaces for
/// the exact-dispersion spectral simulator. Evolution is diagonal in the
/// (p, k) representation, so there is no time-stepping error, only grid
/// (representation) error.
struct SpectralGrid {
    int n_tau = 512;           ///< power of two >= 64
    double tau_extent = 16.0;  ///< half-width of the tau window, units of sigma
    int n_p = 256;             ///< power of two >= 64
    double p_extent = 0.08;    ///< half-width of the momentum window, units of mc
    double p_center = 0.0;     ///< momentum window center, units of mc
    double tau_center = 0.0;   ///< tau window center, units of time

    void validate() const;

    /// Grid centered on the scenario's packets and on tau_b, wide enough
    /// for the default quadrature window.
    static SpectralGrid suggest(const Scenario& scenario, double tau_b);
};

struct DensityResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Conditional density sampled on the spectral tau grid, normalized by
/// the conditioning-clock integral.
struct SampledDensity {
    std::vector<double> tau;
    std::vector<double> density;
    double error_estimate = 0.0;

    double normalization() const;  ///< trapezoidal integral of the density
    double mean() const;           ///< trapezoidal first moment
};

/// Leading-order conditional density from direct t-quadrature of the
/// per-clock effect integrands, with the denominator division kept at
/// strict first order so the result matches the closed form of the
/// `analytic` module up to quadrature error.
///
/// When `spec` has an empty window (t_lo == t_hi) the default window
/// [min(tau_a, tau_b) - 12 sigma, max + 12 sigma] is used; otherwise the
/// window is auto-extended to cover the Gaussian supports unless
/// `auto_extend` is disabled (fault-injection hook for negative tests).
DensityResult leading_order_density(const Scenario& scenario, double tau_a, double tau_b,
                                    const QuadratureSpec& spec, bool auto_extend = true);

/// Nonperturbative conditional density from exact-dispersion evolution
/// e^{-i E(p,k) t}, E(p,k) = mc^2 [sqrt(p^2/m^2c^2 + (1 + k/mc^2)^2) - 1].
/// Requires natural units, unit mass and x-aligned momenta. The error
/// estimate combines t-refinement with a half-resolution grid comparison.
SampledDensity nonperturbative_distribution(const Scenario& scenario, double tau_b,
                                            const SpectralGrid& grid, const QuadratureSpec& spec);

/// Density at a single tau_a, linearly interpolated from the sampled grid.
DensityResult nonperturbative_density(const Scenario& scenario, double tau_a, double tau_b,
                                      const SpectralGrid& grid, const QuadratureSpec& spec);

/// Trace distance between clock A's exactly-evolved reduced state at
/// coordinate time t and the first-order commutator expansion around the
/// freely evolved fiducial.
double reduced_clock_state_check(const Scenario& scenario, double t, const SpectralGrid& grid);

}  // namespace properclock
