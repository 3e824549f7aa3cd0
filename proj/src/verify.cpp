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

#include "properclock/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "properclock/analytic.hpp"
#include "properclock/metrology.hpp"
#include "properclock/oracle.hpp"

namespace properclock {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void push(VerifyReport& report, const std::string& name, double measured, double threshold,
          bool pass) {
    report.checks.push_back({name, measured, threshold, pass});
}

void push_upper(VerifyReport& report, const std::string& name, double measured, double threshold) {
    push(report, name, measured, threshold, measured <= threshold);
}

struct GridMoments {
    double z, mean, second_about_tau_b;
};

GridMoments grid_moments(const ConditionalDistribution& dist) {
    double z = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i + 1 < dist.tau_grid.size(); ++i) {
        const double w = 0.5 * (dist.tau_grid[i + 1] - dist.tau_grid[i]);
        for (int side = 0; side < 2; ++side) {
            const double tau = dist.tau_grid[i + side];
            const double rho = dist.density[i + side];
            z += w * rho;
            m1 += w * rho * tau;
            m2 += w * rho * (tau - dist.tau_b) * (tau - dist.tau_b);
        }
    }
    return {z, m1 / z, m2 / z};
}

void analytic_suite(VerifyReport& report) {
    const double dh_values[] = {0.0, 0.02, 0.05};
    const double sigma_values[] = {1.0, 2000.0};
    const double tau_b_over_sigma[] = {0.0, 1.5, 3.0};

    double norm_dev = 0.0, mean_err = 0.0, var_err = 0.0;
    for (double dh : dh_values)
        for (double sigma : sigma_values)
            for (double r : tau_b_over_sigma) {
                const double tau_b = r * sigma;
                const auto dist = sample_conditional(tau_b, sigma, dh, 0.0, tau_b - 10.0 * sigma,
                                                     tau_b + 10.0 * sigma, 4001);
                const GridMoments m = grid_moments(dist);
                norm_dev = std::max(norm_dev, std::abs(m.z - 1.0));
                const double mean_ref = mean_tau(tau_b, dh, 0.0);
                mean_err = std::max(mean_err,
                                    std::abs(m.mean - mean_ref) / std::max(std::abs(mean_ref), sigma));
                const double var_ref = variance_tau(sigma, dh, 0.0);
                var_err = std::max(var_err, std::abs(m.second_about_tau_b - var_ref) / var_ref);
            }
    push_upper(report, "analytic.normalization", norm_dev, 1e-9);
    push_upper(report, "analytic.mean_vs_closed_form", mean_err, 1e-8);
    push_upper(report, "analytic.variance_vs_closed_form", var_err, 1e-8);

    // energy-balance identity between the mean dilation factors and the
    // superposition kinetic energies, over random parameter draws
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> up(-0.1, 0.1);
    std::uniform_real_distribution<double> ud(0.005, 0.05);
    std::uniform_real_distribution<double> ut(0.05, kPi - 0.05);
    std::uniform_real_distribution<double> uf(0.0, kPi);
    double identity_err = 0.0;
    int draws = 0;
    while (draws < 1000) {
        const Eigen::Vector3d pa(up(rng), up(rng), up(rng));
        const Eigen::Vector3d pap(up(rng), up(rng), up(rng));
        const Eigen::Vector3d pb(up(rng), up(rng), up(rng));
        const double delta = ud(rng), delta_b = ud(rng);
        const double theta = ut(rng), phi = uf(rng);
        const MomentumSuperposition sup(GaussianPacket(pa, delta), GaussianPacket(pap, delta),
                                        theta, phi);
        if (sup.norm * sup.norm < 0.1) continue;
        ++draws;
        const GaussianPacket b(pb, delta_b);
        const double lhs = 1.0 - (kinetic_energy_mean(sup, 1.0) - kinetic_energy_mean(b, 1.0));
        const double rhs = dilation_factors(sup, b, 1.0).total();
        identity_err = std::max(identity_err, std::abs(lhs - rhs) / std::abs(lhs));
    }
    push_upper(report, "analytic.energy_identity", identity_err, 1e-12);

    // classical limit: leading order reproduces the momentum-difference
    // formula, and the gap to the exact gamma ratio shrinks as p^4
    double exact_gap = 0.0, leading_gap = 0.0;
    for (double p : {0.02, 0.05, 0.1, 0.2}) {
        const Eigen::Vector3d pa(p, 0.0, 0.0), pb(p / 3.0, 0.0, 0.0);
        const ClassicalDilation d = classical_dilation(pa, pb, 1.0);
        const double formula = 1.0 - (pa.squaredNorm() - pb.squaredNorm()) / 2.0;
        leading_gap = std::max(leading_gap, std::abs(d.leading_order - formula));
        exact_gap = std::max(exact_gap, std::abs(d.leading_order - d.exact) / (p * p * p * p));
    }
    push_upper(report, "analytic.classical_leading_order", leading_gap, 1e-15);
    push_upper(report, "analytic.classical_fourth_order_gap", exact_gap, 1.0);
}

void oracle_suite(VerifyReport& report, const VerifyHooks& hooks) {
    // leading-order quadrature oracle vs closed form, sup-norm over tau_a
    {
        const double sigma = 1.0, tau_b = 0.8;
        const double delta = 0.01;
        const MomentumSuperposition sup(GaussianPacket(0.06, delta), GaussianPacket(0.14, delta),
                                        kPi / 3.0, 0.0);
        const GaussianPacket rest(0.0, delta);
        const Scenario scenario(1.0, sup, rest, ClockFiducial(sigma), ClockFiducial(sigma));
        const double h_a = kinetic_energy_mean(sup, 1.0);
        const double h_b = kinetic_energy_mean(rest, 1.0);

        QuadratureSpec spec;
        bool auto_extend = true;
        if (hooks.window_shrink) {
            spec.t_lo = tau_b - 0.5 * sigma;
            spec.t_hi = tau_b + 0.5 * sigma;
            auto_extend = false;
        }
        double sup_norm = 0.0;
        try {
            for (int i = 0; i <= 20; ++i) {
                const double tau_a = tau_b + sigma * (-5.0 + 0.5 * i);
                const double closed = conditional_density(tau_a, tau_b, sigma, h_a, h_b);
                const DensityResult q =
                    leading_order_density(scenario, tau_a, tau_b, spec, auto_extend);
                sup_norm = std::max(sup_norm, std::abs(closed - q.value));
            }
        } catch (const QuadratureError&) {
            sup_norm = kInf;
        }
        push_upper(report, "oracle.leading_order_agreement", sup_norm, 1e-6 / sigma);
    }

    // exact-dispersion mean dilation approaches the closed form with a
    // residual shrinking at least like p^3.5
    {
        const double sigma = 2000.0, tau_b = sigma;
        std::vector<double> log_p, log_d;
        for (double p : {0.02, 0.04, 0.08}) {
            const double delta = 0.5 * p;
            const GaussianPacket moving(p, delta), rest(0.0, delta);
            const Scenario scenario(1.0, moving, rest, ClockFiducial(sigma), ClockFiducial(sigma));

            SpectralGrid grid;
            grid.n_tau = 256;
            grid.tau_extent = 16.0;
            grid.n_p = 128;
            grid.p_center = 0.5 * p;
            grid.p_extent = 5.5 * p;
            grid.tau_center = tau_b;

            const SampledDensity dist =
                nonperturbative_distribution(scenario, tau_b, grid, QuadratureSpec{});
            const double h_a = kinetic_energy_mean(moving, 1.0);
            const double h_b = kinetic_energy_mean(rest, 1.0);
            const double discrepancy =
                std::abs(dist.mean() - mean_tau(tau_b, h_a, h_b)) / tau_b;
            log_p.push_back(std::log(p));
            log_d.push_back(std::log(std::max(discrepancy, 1e-300)));
        }
        // least-squares slope of log discrepancy vs log p
        const int n = static_cast<int>(log_p.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = 0; i < n; ++i) {
            sx += log_p[i];
            sy += log_d[i];
            sxx += log_p[i] * log_p[i];
            sxy += log_p[i] * log_d[i];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        push(report, "oracle.scaling_exponent", slope, 3.5, slope >= 3.5);
    }

    // first-order reduced-state model against the exact evolution
    {
        const double sigma = 2000.0;
        const GaussianPacket moving(0.04, 0.02), rest(0.0, 0.02);
        const Scenario scenario(1.0, moving, rest, ClockFiducial(sigma), ClockFiducial(sigma));
        SpectralGrid grid;
        grid.n_tau = 256;
        grid.tau_extent = 12.0;
        grid.n_p = 128;
        grid.p_center = 0.04;
        grid.p_extent = 0.22;
        grid.tau_center = 0.5 * sigma;
        const double dist = reduced_clock_state_check(scenario, 0.5 * sigma, grid);
        push_upper(report, "oracle.reduced_state_first_order", dist, 1e-3);
    }
}

void metrology_suite(VerifyReport& report, const VerifyHooks& hooks) {
    TwoLevelClock two_level = make_two_level(1.0);
    two_level.mu *= hooks.mu_scale;
    const IdealContinuousClock continuous{1.0};
    const TwoLevelFiducial plus = TwoLevelFiducial(1.0, 1.0) / std::sqrt(2.0);

    push_upper(report, "metrology.mu_vs_omega_over_pi",
               std::abs(two_level.mu - hooks.mu_scale / kPi), 1e-9);
    push_upper(report, "metrology.completeness_two_level",
               povm_completeness(ClockModel{two_level}, 4096), 1e-9);
    push_upper(report, "metrology.completeness_continuous",
               povm_completeness(ClockModel{continuous}, 4096), 1e-9);
    push_upper(report, "metrology.covariance_two_level",
               covariance_check(ClockModel{two_level}, kPi / 2.0, 1024), 1e-9);
    push_upper(report, "metrology.covariance_continuous",
               covariance_check(ClockModel{continuous}, 16.0 / 1024.0, 1024), 1e-9);

    const ContinuousFiducial gauss = gaussian_fiducial(1.0);
    double bias = 0.0, drift = 0.0;
    for (double tau : {0.7, 3.0}) {
        const Theorem1Result t = theorem1_check(continuous, gauss, tau);
        bias = std::max(bias, std::abs(t.bias));
        drift = std::max(drift, std::abs(t.variance_drift));
    }
    push_upper(report, "metrology.theorem1_bias", bias, 1e-8);
    push_upper(report, "metrology.theorem1_variance_drift", drift, 1e-8);

    const FisherResult fg = fisher_information(continuous, gauss);
    push_upper(report, "metrology.fisher_agreement_continuous",
               std::abs(fg.classical - fg.four_var_h) / fg.four_var_h, 1e-6);
    const FisherResult ft = fisher_information(two_level, plus);
    push_upper(report, "metrology.fisher_agreement_two_level",
               std::abs(ft.classical - ft.four_var_h) / ft.four_var_h, 1e-6);

    const HelstromResult hg = helstrom_bound_check(continuous, gauss);
    push_upper(report, "metrology.helstrom_saturation_gaussian",
               std::abs(hg.var_t / hg.bound - 1.0), 1e-9);
    push_upper(report, "metrology.mass_time_product_gaussian",
               std::abs(hg.mass_time_product - 0.5), 1e-9);
    const HelstromResult hh = helstrom_bound_check(continuous, two_hump_fiducial(1.0, 6.0));
    push(report, "metrology.helstrom_strict_two_hump", hh.var_t / hh.bound, 1.0,
         hh.var_t / hh.bound > 1.0);

    const auto t_perp = orthogonality_time(two_level, plus);
    const double vh = 0.25 * ft.four_var_h;
    const double product = t_perp ? *t_perp * 2.0 * std::sqrt(vh) : kInf;
    push_upper(report, "metrology.orthogonality_product", std::abs(product - kPi), 1e-9);
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerifyReport run_verify(const std::string& suite, const VerifyHooks& hooks) {
    VerifyReport report;
    const bool all = suite == "all";
    if (!all && suite != "analytic" && suite != "oracle" && suite != "metrology")
        throw std::invalid_argument("verify: unknown suite '" + suite + "'");
    if (all || suite == "analytic") analytic_suite(report);
    if (all || suite == "oracle") oracle_suite(report, hooks);
    if (all || suite == "metrology") metrology_suite(report, hooks);
    return report;
}

std::string verify_report_json(const VerifyReport& report) {
    nlohmann::json doc;
    doc["passed"] = report.all_passed();
    doc["checks"] = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["measured"] = std::isfinite(c.measured) ? nlohmann::json(c.measured)
                                                   : nlohmann::json("non-finite");
        jc["threshold"] = c.threshold;
        jc["pass"] = c.pass;
        doc["checks"].push_back(jc);
    }
    return doc.dump(2) + "\n";
}

}  // namespace properclock
