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

#include "properclock/analytic.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace properclock {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310005024;
}

double conditional_density(double tau_a, double tau_b, double sigma, double h_a, double h_b,
                           double mass_c2) {
    if (!(sigma > 0.0)) throw std::invalid_argument("conditional_density: sigma must be positive");
    const double k = (h_a - h_b) / mass_c2;
    if (std::abs(k) > 0.1)
        std::fprintf(stderr,
                     "properclock: warning: |h_a - h_b|/mc^2 = %.3g exceeds 0.1; "
                     "leading-order density is unreliable\n",
                     std::abs(k));
    const double u = (tau_a - tau_b) / sigma;
    const double gauss = std::exp(-0.5 * u * u) / (kSqrt2Pi * sigma);
    const double bracket =
        1.0 + 0.5 * k * (1.0 - (tau_a * tau_a - tau_b * tau_b) / (sigma * sigma));
    return gauss * bracket;
}

double mean_tau(double tau_b, double h_a, double h_b, double mass_c2) {
    return (1.0 - (h_a - h_b) / mass_c2) * tau_b;
}

double variance_tau(double sigma, double h_a, double h_b, double mass_c2) {
    return (1.0 - (h_a - h_b) / mass_c2) * sigma * sigma;
}

double validity_radius(double sigma, double h_a, double h_b, double mass_c2) {
    const double dh = std::abs(h_a - h_b);
    if (dh == 0.0) return std::numeric_limits<double>::infinity();
    return sigma * std::sqrt(2.0 * mass_c2 / dh);
}

ClassicalDilation classical_dilation(const Eigen::Vector3d& pbar_a, const Eigen::Vector3d& pbar_b,
                                     double mass) {
    const double m2 = mass * mass;
    const double leading = 1.0 - (pbar_a.squaredNorm() - pbar_b.squaredNorm()) / (2.0 * m2);
    const double gamma_a = std::sqrt(1.0 + pbar_a.squaredNorm() / m2);
    const double gamma_b = std::sqrt(1.0 + pbar_b.squaredNorm() / m2);
    return {leading, gamma_b / gamma_a};
}

DilationFactors dilation_factors(const MomentumSuperposition& sup, const GaussianPacket& cm_b,
                                 double mass) {
    const double m2 = mass * mass;
    const double c2t = std::cos(sup.theta) * std::cos(sup.theta);
    const double s2t = std::sin(sup.theta) * std::sin(sup.theta);
    const double pa2 = sup.first.pbar.squaredNorm();
    const double pap2 = sup.second.pbar.squaredNorm();
    const double pb2 = cm_b.pbar.squaredNorm();
    const double da2 = sup.first.delta * sup.first.delta;
    const double db2 = cm_b.delta * cm_b.delta;

    DilationFactors f;
    f.gamma_c_inv =
        1.0 - (pa2 * c2t + pap2 * s2t - pb2) / (2.0 * m2) - (da2 - db2) / (4.0 * m2);

    const double s = std::cos(sup.phi) * std::sin(2.0 * sup.theta);
    const double dp2 = (sup.second.pbar - sup.first.pbar).squaredNorm();
    const double cos2t = std::cos(2.0 * sup.theta);
    const double denom = 8.0 * m2 * (s + std::exp(dp2 / (4.0 * da2)));
    f.gamma_q_inv = s * (dp2 - 2.0 * (pap2 - pa2) * cos2t) / denom;
    return f;
}

ConditionalDistribution sample_conditional(double tau_b, double sigma, double h_a, double h_b,
                                           double lo, double hi, int n, double mass_c2) {
    if (n < 2 || !(hi > lo))
        throw std::invalid_argument("sample_conditional: need a monotone grid of >= 2 points");
    ConditionalDistribution dist;
    dist.tau_b = tau_b;
    dist.tau_grid.resize(n);
    dist.density.resize(n);
    const double dt = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        dist.tau_grid[i] = lo + i * dt;
        dist.density[i] = conditional_density(dist.tau_grid[i], tau_b, sigma, h_a, h_b, mass_c2);
    }
    // trapezoidal moments
    double z = 0.0, m1 = 0.0, m2 = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const double w = 0.5 * dt;
        z += w * (dist.density[i] + dist.density[i + 1]);
        m1 += w * (dist.density[i] * dist.tau_grid[i] + dist.density[i + 1] * dist.tau_grid[i + 1]);
        m2 += w * (dist.density[i] * dist.tau_grid[i] * dist.tau_grid[i] +
                   dist.density[i + 1] * dist.tau_grid[i + 1] * dist.tau_grid[i + 1]);
    }
    dist.mean = m1 / z;
    dist.variance = m2 / z - dist.mean * dist.mean;
    return dist;
}

}  // namespace properclock
