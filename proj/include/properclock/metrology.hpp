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

#include <functional>
#include <optional>
#include <variant>

namespace properclock {

/// Continuous clock with orthogonal readings, <tau|tau'> = delta(tau - tau').
struct IdealContinuousClock {
    double sigma = 1.0;  ///< characteristic fiducial width, sets grid scales
};

/// Two-level clock with |tau> = (|0> + e^{2 i omega tau}|1>)/sqrt(2) on
/// (0, 2 pi / omega] and Hamiltonian omega sigma_z. The POVM weight mu is
/// derived, not assumed; see derive_two_level_mu.
struct TwoLevelClock {
    double omega = 1.0;
    double mu = 0.0;
};

using ClockModel = std::variant<IdealContinuousClock, TwoLevelClock>;

/// Brute-force midpoint integration of |tau><tau| over one period fixes
/// the completeness weight; analytically mu = omega / pi.
double derive_two_level_mu(double omega, int resolution = 4096);

/// Two-level clock with the derived weight filled in.
TwoLevelClock make_two_level(double omega, int resolution = 4096);

/// Real amplitude over tau with <T> = 0, plus its derivative and the
/// half-width outside which it is numerically negligible.
struct ContinuousFiducial {
    std::function<double(double)> psi;
    std::function<double(double)> dpsi;
    double extent = 0.0;
};

ContinuousFiducial gaussian_fiducial(double sigma);

/// Symmetric mixture of two Gaussian humps at +-separation/2; not of the
/// optimal form, used to probe strict Helstrom inequality.
ContinuousFiducial two_hump_fiducial(double sigma, double separation);

using TwoLevelFiducial = Eigen::Vector2cd;

/// Operator-norm deviation of the discretized resolution of identity
/// int E(tau) dtau from the identity.
double povm_completeness(const ClockModel& model, int resolution = 4096);

/// Operator-norm deviation of U(tau') E(tau) U(tau')^dag from E(tau + tau')
/// maximized over the discretized tau grid.
double covariance_check(const ClockModel& model, double tau_shift, int resolution = 4096);

struct Theorem1Result {
    double bias = 0.0;
    double variance_drift = 0.0;
};

/// Mean and variance of the measured reading after evolving the fiducial
/// to parameter tau, relative to the unbiased-estimator ideal.
Theorem1Result theorem1_check(const IdealContinuousClock& model, const ContinuousFiducial& fiducial,
                              double tau);
Theorem1Result theorem1_check(const TwoLevelClock& model, const TwoLevelFiducial& fiducial,
                              double tau);

struct FisherResult {
    double classical = 0.0;   ///< from the measured distribution and its tau-derivative
    double four_var_h = 0.0;  ///< 4 Var(H_clock) on the fiducial
};

FisherResult fisher_information(const IdealContinuousClock& model,
                                const ContinuousFiducial& fiducial);
FisherResult fisher_information(const TwoLevelClock& model, const TwoLevelFiducial& fiducial);

struct HelstromResult {
    double var_t = 0.0;
    double bound = 0.0;              ///< 1 / (4 Var(H))
    double mass_time_product = 0.0;  ///< Delta H * Delta T, equals Delta M Delta T c^2
};

HelstromResult helstrom_bound_check(const IdealContinuousClock& model,
                                    const ContinuousFiducial& fiducial);
HelstromResult helstrom_bound_check(const TwoLevelClock& model, const TwoLevelFiducial& fiducial);

/// Smallest t > 0 with |<psi| e^{-iHt} |psi>| < 1e-9, bracketed and
/// bisected to relative error 1e-9; nullopt when no orthogonality occurs
/// within ten periods.
std::optional<double> orthogonality_time(const TwoLevelClock& model,
                                         const TwoLevelFiducial& fiducial);

}  // namespace properclock
