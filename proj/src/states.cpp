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

#include "properclock/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace properclock {

namespace {

void require_finite(const Eigen::Vector3d& v, const char* what) {
    if (!v.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite component");
}

}  // namespace

GaussianPacket::GaussianPacket(const Eigen::Vector3d& pbar_, double delta_)
    : pbar(pbar_), delta(delta_) {
    require_finite(pbar, "GaussianPacket.pbar");
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw std::invalid_argument("GaussianPacket.delta must be a positive finite number");
}

GaussianPacket::GaussianPacket(double px, double delta_)
    : GaussianPacket(Eigen::Vector3d(px, 0.0, 0.0), delta_) {}

MomentumSuperposition::MomentumSuperposition(const GaussianPacket& first_,
                                             const GaussianPacket& second_, double theta_,
                                             double phi_)
    : first(first_), second(second_), theta(theta_), phi(phi_), norm(0.0) {
    if (first.delta != second.delta)
        throw std::invalid_argument("MomentumSuperposition: branch spreads must be equal");
    if (!(theta >= 0.0 && theta < std::numbers::pi))
        throw std::invalid_argument("MomentumSuperposition: theta must lie in [0, pi)");
    if (!(phi >= 0.0 && phi <= std::numbers::pi))
        throw std::invalid_argument("MomentumSuperposition: phi must lie in [0, pi]");
    const double lambda = packet_overlap(first, second);
    const double norm2 = 1.0 + std::cos(phi) * std::sin(2.0 * theta) * lambda;
    if (!(norm2 > 0.0))
        throw std::invalid_argument("MomentumSuperposition: state has vanishing norm");
    norm = std::sqrt(norm2);
}

ClockFiducial::ClockFiducial(double sigma_) : sigma(sigma_) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("ClockFiducial.sigma must be a positive finite number");
}

Scenario::Scenario(double mass_, CenterOfMass cm_a_, GaussianPacket cm_b_, ClockFiducial clock_a_,
                   ClockFiducial clock_b_, UnitSystem units_)
    : mass(mass_),
      cm_a(std::move(cm_a_)),
      cm_b(std::move(cm_b_)),
      clock_a(clock_a_),
      clock_b(clock_b_),
      units(units_) {
    if (!(mass > 0.0)) throw std::invalid_argument("Scenario.mass must be positive");
    if (clock_a.sigma != clock_b.sigma)
        throw std::invalid_argument("Scenario: both clocks must share the fiducial width sigma");
}

double kinetic_energy_mean(const GaussianPacket& packet, double mass) {
    return (packet.pbar.squaredNorm() + 0.5 * packet.delta * packet.delta) / (2.0 * mass);
}

double kinetic_energy_mean(const MomentumSuperposition& sup, double mass) {
    const double c = std::cos(sup.theta);
    const double s = std::sin(sup.theta);
    const double lambda = packet_overlap(sup.first, sup.second);
    const double delta2 = sup.first.delta * sup.first.delta;
    // Cross matrix element <pbar|P^2|pbar'> = overlap * (|midpoint|^2 + delta^2/2).
    const Eigen::Vector3d mid = 0.5 * (sup.first.pbar + sup.second.pbar);
    const double diag_a = sup.first.pbar.squaredNorm() + 0.5 * delta2;
    const double diag_b = sup.second.pbar.squaredNorm() + 0.5 * delta2;
    const double cross = lambda * (mid.squaredNorm() + 0.5 * delta2);
    const double p2 =
        (c * c * diag_a + s * s * diag_b + 2.0 * c * s * std::cos(sup.phi) * cross) /
        (sup.norm * sup.norm);
    return p2 / (2.0 * mass);
}

double kinetic_energy_mean(const CenterOfMass& cm, double mass) {
    return std::visit([mass](const auto& state) { return kinetic_energy_mean(state, mass); }, cm);
}

double packet_overlap(const GaussianPacket& a, const GaussianPacket& b) {
    if (a.delta != b.delta)
        throw std::invalid_argument("packet_overlap: spreads must be equal");
    const double d2 = (b.pbar - a.pbar).squaredNorm();
    return std::exp(-d2 / (4.0 * a.delta * a.delta));
}

}  // namespace properclock
