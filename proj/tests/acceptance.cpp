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

// Acceptance gate: one pass/fail line per criterion, exit code equals the
// number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "properclock/analytic.hpp"
#include "properclock/estimate.hpp"
#include "properclock/metrology.hpp"
#include "properclock/oracle.hpp"
#include "properclock/sweep.hpp"

using namespace properclock;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int n, bool pass, const std::string& what, const std::string& detail) {
    std::printf("criterion %2d: %s  %s (%s)\n", n, pass ? "PASS" : "FAIL", what.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

struct GridScan {
    double norm_dev = 0.0;
    double mean_err = 0.0;
    double second_moment_err = 0.0;
};

GridScan scan_density_grid() {
    GridScan out;
    const double dh_values[] = {0.0, 0.0125, 0.025, 0.0375, 0.05};
    const double tau_ratios[] = {0.0, 0.75, 1.5, 2.25, 3.0};
    const double sigmas[] = {0.5, 1.0, 2.0, 100.0, 2000.0};
    for (double dh : dh_values)
        for (double r : tau_ratios)
            for (double sigma : sigmas) {
                const double tau_b = r * sigma;
                const auto dist = sample_conditional(tau_b, sigma, dh, 0.0, tau_b - 10.0 * sigma,
                                                     tau_b + 10.0 * sigma, 2001);
                double z = 0.0, m1 = 0.0, m2 = 0.0;
                for (std::size_t i = 0; i + 1 < dist.tau_grid.size(); ++i) {
                    const double w = 0.5 * (dist.tau_grid[i + 1] - dist.tau_grid[i]);
                    for (int side = 0; side < 2; ++side) {
                        const double tau = dist.tau_grid[i + side];
                        const double rho = dist.density[i + side];
                        z += w * rho;
                        m1 += w * rho * tau;
                        m2 += w * rho * (tau - tau_b) * (tau - tau_b);
                    }
                }
                out.norm_dev = std::max(out.norm_dev, std::abs(z - 1.0));
                const double mean_ref = mean_tau(tau_b, dh, 0.0);
                out.mean_err = std::max(
                    out.mean_err, std::abs(m1 / z - mean_ref) / std::max(std::abs(mean_ref), sigma));
                const double var_ref = variance_tau(sigma, dh, 0.0);
                out.second_moment_err =
                    std::max(out.second_moment_err, std::abs(m2 / z - var_ref) / var_ref);
            }
    return out;
}

void criterion_1_and_2() {
    const GridScan scan = scan_density_grid();
    report(1, scan.norm_dev <= 1e-9, "density normalization on +-10 sigma grids",
           "max |integral - 1| = " + std::to_string(scan.norm_dev));
    const bool pass = scan.mean_err <= 1e-8 && scan.second_moment_err <= 1e-8;
    char detail[128];
    std::snprintf(detail, sizeof detail, "mean rel err %.3g, spread rel err %.3g", scan.mean_err,
                  scan.second_moment_err);
    report(2, pass, "grid moments match the closed forms", detail);
}

void criterion_3() {
    double sup_norm_scaled = 0.0;
    struct Case {
        Scenario scenario;
        double sigma, tau_b;
    };
    std::vector<Case> cases;
    {
        const GaussianPacket moving(0.1, 0.01), rest(0.0, 0.01);
        cases.push_back({Scenario(1.0, moving, rest, ClockFiducial(1.0), ClockFiducial(1.0)), 1.0,
                         0.8});
        cases.push_back(
            {Scenario(1.0, moving, rest, ClockFiducial(2000.0), ClockFiducial(2000.0)), 2000.0,
             1500.0});
        const MomentumSuperposition sup(GaussianPacket(0.06, 0.01), GaussianPacket(0.14, 0.01),
                                        kPi / 3.0, 0.0);
        cases.push_back(
            {Scenario(1.0, sup, rest, ClockFiducial(1.0), ClockFiducial(1.0)), 1.0, 0.3});
    }
    for (const Case& c : cases) {
        const double h_a = kinetic_energy_mean(c.scenario.cm_a, 1.0);
        const double h_b = kinetic_energy_mean(c.scenario.cm_b, 1.0);
        for (int i = 0; i <= 20; ++i) {
            const double tau_a = c.tau_b + c.sigma * (-5.0 + 0.5 * i);
            const double closed = conditional_density(tau_a, c.tau_b, c.sigma, h_a, h_b);
            const DensityResult q =
                leading_order_density(c.scenario, tau_a, c.tau_b, QuadratureSpec{});
            sup_norm_scaled = std::max(sup_norm_scaled, std::abs(closed - q.value) * c.sigma);
        }
    }
    report(3, sup_norm_scaled <= 1e-6, "closed form vs quadrature oracle",
           "max sigma-scaled gap = " + std::to_string(sup_norm_scaled));
}

void criterion_4() {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> up(-0.1, 0.1);
    std::uniform_real_distribution<double> ud(0.005, 0.05);
    std::uniform_real_distribution<double> ut(0.05, kPi - 0.05);
    std::uniform_real_distribution<double> uf(0.0, kPi);
    double worst = 0.0;
    int draws = 0;
    while (draws < 1000) {
        const double delta = ud(rng);
        const GaussianPacket first(Eigen::Vector3d(up(rng), up(rng), up(rng)), delta);
        const GaussianPacket second(Eigen::Vector3d(up(rng), up(rng), up(rng)), delta);
        const GaussianPacket b(Eigen::Vector3d(up(rng), up(rng), up(rng)), ud(rng));
        MomentumSuperposition sup(first, second, ut(rng), uf(rng));
        if (sup.norm * sup.norm < 0.1) continue;
        ++draws;
        const double lhs = 1.0 - (kinetic_energy_mean(sup, 1.0) - kinetic_energy_mean(b, 1.0));
        const double rhs = dilation_factors(sup, b, 1.0).total();
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    report(4, worst <= 1e-12, "energy balance identity over 1000 draws",
           "max rel err = " + std::to_string(worst));
}

void criterion_5() {
    const double sigma = 2000.0, tau_b = sigma;
    std::vector<double> log_p, log_d;
    bool ok = true;
    std::string detail;
    try {
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
            const double discrepancy = std::abs(dist.mean() - mean_tau(tau_b, h_a, h_b)) / tau_b;
            log_p.push_back(std::log(p));
            log_d.push_back(std::log(std::max(discrepancy, 1e-300)));
        }
        const int n = static_cast<int>(log_p.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = 0; i < n; ++i) {
            sx += log_p[i];
            sy += log_d[i];
            sxx += log_p[i] * log_p[i];
            sxy += log_p[i] * log_d[i];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        ok = slope >= 3.5;
        detail = "fitted exponent = " + std::to_string(slope);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(5, ok, "exact-dispersion mean dilation scaling", detail);
}

void criterion_6() {
    bool ok = true;
    std::string detail;

    // symmetric superposition: nonnegative effect, maximum at theta = pi/4
    {
        SweepConfig config;
        config.axis = SweepAxis::theta;
        config.grid = parse_grid("0:1.5707963267948966:33");
        config.ptot = 0.0;
        config.dp = 0.17;
        config.delta = 0.01;
        const SweepResult r = run_sweep(config);
        int argmax = 0;
        for (int i = 0; i < config.grid.n; ++i) {
            if (r.rows[i].gamma_q_inv < -1e-30) ok = false;
            if (r.rows[i].gamma_q_inv > r.rows[argmax].gamma_q_inv) argmax = i;
        }
        const double step = (kPi / 2.0) / (config.grid.n - 1);
        if (std::abs(r.rows[argmax].theta - kPi / 4.0) > 1.01 * step) ok = false;
        if (!ok) detail = "symmetric theta sweep structure violated";
    }

    // boosted superposition: extrema near pi/8 (negative) and 3 pi/8 (positive)
    if (ok) {
        SweepConfig config;
        config.axis = SweepAxis::theta;
        config.grid = parse_grid("0:1.5707963267948966:33");
        config.ptot = 0.3;
        config.dp = 0.17;
        config.delta = 0.01;
        const SweepResult r = run_sweep(config);
        int argmin = 0, argmax = 0;
        for (int i = 0; i < config.grid.n; ++i) {
            if (r.rows[i].gamma_q_inv < r.rows[argmin].gamma_q_inv) argmin = i;
            if (r.rows[i].gamma_q_inv > r.rows[argmax].gamma_q_inv) argmax = i;
        }
        const double step = (kPi / 2.0) / (config.grid.n - 1);
        if (r.rows[argmin].gamma_q_inv >= 0.0 ||
            std::abs(r.rows[argmin].theta - kPi / 8.0) > 2.01 * step)
            ok = false;
        if (r.rows[argmax].gamma_q_inv <= 0.0 ||
            std::abs(r.rows[argmax].theta - 3.0 * kPi / 8.0) > 2.01 * step)
            ok = false;
        if (!ok) detail = "boosted theta sweep extrema misplaced";
    }

    // the optimal momentum difference moves out as ptot grows
    if (ok) {
        std::vector<double> p_opts;
        for (double ptot : {0.0, 0.004, 0.008, 0.012}) {
            SweepConfig config;
            config.axis = SweepAxis::dp;
            config.grid = parse_grid("0.001:0.06:237");
            config.theta = kPi / 8.0;
            config.ptot = ptot;
            config.delta = 0.01;
            const SweepResult r = run_sweep(config);
            p_opts.push_back(*r.p_opt);
        }
        for (std::size_t i = 1; i < p_opts.size(); ++i)
            if (p_opts[i] < p_opts[i - 1] - 1e-12) ok = false;
        if (p_opts.back() <= p_opts.front()) ok = false;
        if (!ok) detail = "p_opt does not grow with ptot";
    }
    if (ok) detail = "theta structure and p_opt trajectory as expected";
    report(6, ok, "dilation sweep qualitative structure", detail);
}

void criterion_7() {
    const EstimateReport r = run_estimate(rb87_preset());
    const double gq = std::abs(r.gamma_q_inv);
    const bool gq_ok = gq >= 3e-16 && gq <= 3e-15;
    const bool coherence_ok = r.required_coherence_time_s &&
                              *r.required_coherence_time_s >= 3.0 &&
                              *r.required_coherence_time_s <= 30.0;
    char detail[128];
    std::snprintf(detail, sizeof detail, "|gamma_q_inv| = %.3g, coherence = %.3g s", gq,
                  r.required_coherence_time_s ? *r.required_coherence_time_s : -1.0);
    report(7, gq_ok && coherence_ok, "rb87 preset feasibility estimate", detail);
}

void criterion_8() {
    double leading_gap = 0.0, envelope = 0.0;
    for (double p : {0.02, 0.05, 0.1, 0.2}) {
        const Eigen::Vector3d pa(p, 0.0, 0.0), pb(p / 3.0, 0.0, 0.0);
        const ClassicalDilation d = classical_dilation(pa, pb, 1.0);
        const double formula = 1.0 - (pa.squaredNorm() - pb.squaredNorm()) / 2.0;
        leading_gap = std::max(leading_gap, std::abs(d.leading_order - formula));
        envelope = std::max(envelope, std::abs(d.leading_order - d.exact) / (p * p * p * p));

        // equal spreads cancel in the mean dilation
        const double delta = 0.01;
        const double h_a = kinetic_energy_mean(GaussianPacket(pa, delta), 1.0);
        const double h_b = kinetic_energy_mean(GaussianPacket(pb, delta), 1.0);
        leading_gap = std::max(leading_gap, std::abs((1.0 - (h_a - h_b)) - formula));
    }
    char detail[128];
    std::snprintf(detail, sizeof detail, "leading gap %.3g, fourth-order envelope %.3g",
                  leading_gap, envelope);
    report(8, leading_gap <= 1e-15 && envelope <= 1.0, "classical limit", detail);
}

void criterion_9() {
    const TwoLevelClock tl = make_two_level(1.0);
    const IdealContinuousClock ic{1.0};
    const TwoLevelFiducial plus = TwoLevelFiducial(1.0, 1.0) / std::sqrt(2.0);
    const ContinuousFiducial gauss = gaussian_fiducial(1.0);

    bool ok = std::abs(tl.mu - 1.0 / kPi) <= 1e-9;
    ok = ok && povm_completeness(ClockModel{tl}, 4096) <= 1e-9;
    ok = ok && covariance_check(ClockModel{tl}, kPi / 2.0, 1024) <= 1e-9;
    for (double tau : {0.7, 3.0}) {
        const Theorem1Result t = theorem1_check(ic, gauss, tau);
        ok = ok && std::abs(t.bias) <= 1e-8 && std::abs(t.variance_drift) <= 1e-8;
    }
    const HelstromResult h = helstrom_bound_check(ic, gauss);
    const double vh = 0.25 / h.bound;
    ok = ok && std::abs(4.0 * vh * h.var_t - 1.0) <= 1e-9;
    ok = ok && std::abs(h.mass_time_product - 0.5) <= 1e-9;
    const auto t_perp = orthogonality_time(tl, plus);
    ok = ok && t_perp && std::abs(*t_perp * 2.0 * 1.0 - kPi) <= 1e-9;
    report(9, ok, "metrology suite invariants", "povm, theorem 1, bounds, orthogonality");
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(PROPERCLOCK_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

void criterion_10() {
    const int clean = run_cli("verify all >/dev/null 2>&1");
    const int bad_mu = run_cli("verify metrology --hook-mu-scale 2 >/dev/null 2>&1");
    const int bad_window = run_cli("verify oracle --hook-window-shrink >/dev/null 2>&1");
    char detail[128];
    std::snprintf(detail, sizeof detail, "clean=%d, mu hook=%d, window hook=%d", clean, bad_mu,
                  bad_window);
    report(10, clean == 0 && bad_mu == 1 && bad_window == 1, "verify gate and negative controls",
           detail);
}

}  // namespace

int main() {
    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
