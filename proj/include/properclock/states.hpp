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

#include <Eigen/Dense>
#include <variant>

namespace properclock {

/// A center-of-mass wave packet localized around an average momentum.
///
/// Internal units are natural: momenta are fractions of mc, energies are
/// fractions of mc^2 and the rest mass is 1 unless stated otherwise. The
/// momentum-space amplitude of a packet with mean `pbar` and isotropic
/// spread `delta` is proportional to exp(-(p - pbar)^2 / (2 delta^2)).
struct GaussianPacket {
    Eigen::Vector3d pbar;  ///< mean momentum, units of mc
    double delta;          ///< momentum spread, units of mc, > 0

    GaussianPacket(const Eigen::Vector3d& pbar_, double delta_);
    GaussianPacket(double px, double delta_);  // 1D embedding (px, 0, 0)
};

/// Coherent superposition cos(theta)|first> + e^{i phi} sin(theta)|second>,
/// divided by `norm` so the state is unit length. Both branches share a
/// single spread; unequal spreads are rejected.
struct MomentumSuperposition {
    GaussianPacket first;
    GaussianPacket second;
    double theta;  ///< branch weight angle, [0, pi)
    double phi;    ///< relative phase, [0, pi]
    double norm;   ///< computed: sqrt(1 + cos(phi) sin(2 theta) overlap)

    MomentumSuperposition(const GaussianPacket& first_, const GaussianPacket& second_,
                          double theta_, double phi_);
};

/// Gaussian internal-clock wave function of width `sigma` in the clock
/// reading (position) basis, centered at tau = 0.
struct ClockFiducial {
    double sigma;  ///< > 0, units of time

    explicit ClockFiducial(double sigma_);
};

using CenterOfMass = std::variant<GaussianPacket, MomentumSuperposition>;

enum class UnitSystem { natural, si };

/// Two-clock configuration. Both clocks share the rest mass and the
/// fiducial width; all momenta must already be in natural units here
/// (SI conversion happens at the CLI boundary).
struct Scenario {
    double mass;  ///< 1 in natural mode
    CenterOfMass cm_a;
    GaussianPacket cm_b;
    ClockFiducial clock_a;
    ClockFiducial clock_b;
    UnitSystem units = UnitSystem::natural;

    Scenario(double mass_, CenterOfMass cm_a_, GaussianPacket cm_b_,
             ClockFiducial clock_a_, ClockFiducial clock_b_,
             UnitSystem units_ = UnitSystem::natural);

    double sigma() const { return clock_a.sigma; }
};

/// Mean non-relativistic kinetic energy <P^2>/2m of a packet, units of mc^2.
/// Evaluates to pbar^2/(2m) + delta^2/(4m).
double kinetic_energy_mean(const GaussianPacket& packet, double mass);

/// Mean kinetic energy of a normalized superposition, including the
/// interference (cross-overlap) term.
double kinetic_energy_mean(const MomentumSuperposition& sup, double mass);

double kinetic_energy_mean(const CenterOfMass& cm, double mass);

/// Overlap <pbar_a | pbar_b> = exp(-|pbar_b - pbar_a|^2 / (4 delta^2)).
/// Real for packets with no position offset. Requires equal spreads.
double packet_overlap(const GaussianPacket& a, const GaussianPacket& b);

}  // namespace properclock
