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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "properclock/analytic.hpp"
#include "properclock/estimate.hpp"
#include "properclock/metrology.hpp"
#include "properclock/oracle.hpp"
#include "properclock/scenario_io.hpp"
#include "properclock/sweep.hpp"
#include "properclock/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalError = 3;

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty() || out_path == "stdout") {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw properclock::ScenarioLoadError("cannot open output file '" + out_path + "'");
    f << payload;
}

int run_sweep_cmd(const std::string& axis, const std::string& grid_text, double ptot, double dp,
                  double theta, double phi, double delta, const std::string& out,
                  const std::string& format) {
    using namespace properclock;
    SweepConfig config;
    if (axis == "dp")
        config.axis = SweepAxis::dp;
    else if (axis == "theta")
        config.axis = SweepAxis::theta;
    else
        throw std::invalid_argument("sweep: axis must be dp or theta");
    config.grid = parse_grid(grid_text);
    config.ptot = ptot;
    config.dp = dp;
    config.theta = theta;
    config.phi = phi;
    config.delta = delta;

    const SweepResult result = run_sweep(config);
    if (format == "csv") {
        emit(out, sweep_csv(result.rows));
        if (result.p_opt)
            std::fprintf(stderr, "p_opt (argmax |gamma_q_inv|): %s\n",
                         format_sci(*result.p_opt).c_str());
    } else {
        nlohmann::json doc;
        doc["rows"] = nlohmann::json::array();
        for (const SweepRow& r : result.rows)
            doc["rows"].push_back({{"dp_over_mc", r.dp_over_mc},
                                   {"ptot_over_mc", r.ptot_over_mc},
                                   {"theta", r.theta},
                                   {"phi", r.phi},
                                   {"delta_over_mc", r.delta_over_mc},
                                   {"gamma_c_inv", r.gamma_c_inv},
                                   {"gamma_q_inv", r.gamma_q_inv}});
        if (result.p_opt)
            doc["p_opt"] = *result.p_opt;
        else
            doc["p_opt"] = nullptr;
        emit(out, doc.dump(2) + "\n");
    }
    return kExitOk;
}

int run_pdist_cmd(const std::string& scenario_path, double tau_b, const std::string& grid_text,
                  const std::string& engine, bool moments, const std::string& out,
                  const std::string& format) {
    using namespace properclock;
    const Scenario scenario = load_scenario(scenario_path);
    const GridSpec grid = parse_grid(grid_text);
    const double sigma = scenario.sigma();
    const double h_a = kinetic_energy_mean(scenario.cm_a, scenario.mass);
    const double h_b = kinetic_energy_mean(scenario.cm_b, scenario.mass);

    std::vector<double> tau(grid.n), density(grid.n);
    for (int i = 0; i < grid.n; ++i) tau[i] = grid.at(i);

    if (engine == "analytic") {
        for (int i = 0; i < grid.n; ++i)
            density[i] = conditional_density(tau[i], tau_b, sigma, h_a, h_b);
    } else if (engine == "quadrature") {
        for (int i = 0; i < grid.n; ++i)
            density[i] = leading_order_density(scenario, tau[i], tau_b, QuadratureSpec{}).value;
    } else if (engine == "nonperturbative") {
        const SpectralGrid sgrid = SpectralGrid::suggest(scenario, tau_b);
        const SampledDensity d =
            nonperturbative_distribution(scenario, tau_b, sgrid, QuadratureSpec{});
        for (int i = 0; i < grid.n; ++i) {
            const auto it = std::lower_bound(d.tau.begin(), d.tau.end(), tau[i]);
            if (it == d.tau.begin() || it == d.tau.end())
                throw std::invalid_argument("pdist: tau grid extends beyond the spectral window");
            const std::size_t hi = static_cast<std::size_t>(it - d.tau.begin());
            const double w = (tau[i] - d.tau[hi - 1]) / (d.tau[hi] - d.tau[hi - 1]);
            density[i] = (1.0 - w) * d.density[hi - 1] + w * d.density[hi];
        }
    } else {
        throw std::invalid_argument("pdist: engine must be analytic, quadrature or nonperturbative");
    }

    double mean = 0.0, variance = 0.0;
    if (moments) {
        double z = 0.0, m1 = 0.0;
        for (int i = 0; i + 1 < grid.n; ++i) {
            const double w = 0.5 * (tau[i + 1] - tau[i]);
            z += w * (density[i] + density[i + 1]);
            m1 += w * (density[i] * tau[i] + density[i + 1] * tau[i + 1]);
        }
        mean = m1 / z;
        double m2 = 0.0;
        for (int i = 0; i + 1 < grid.n; ++i) {
            const double w = 0.5 * (tau[i + 1] - tau[i]);
            m2 += w * (density[i] * (tau[i] - mean) * (tau[i] - mean) +
                       density[i + 1] * (tau[i + 1] - mean) * (tau[i + 1] - mean));
        }
        variance = m2 / z;
    }

    if (format == "csv") {
        std::string payload = "tau_a,density\n";
        for (int i = 0; i < grid.n; ++i)
            payload += format_sci(tau[i]) + "," + format_sci(density[i]) + "\n";
        if (moments) {
            payload += "mean," + format_sci(mean) + "\n";
            payload += "variance," + format_sci(variance) + "\n";
        }
        emit(out, payload);
    } else {
        nlohmann::json doc;
        doc["tau_b"] = tau_b;
        doc["engine"] = engine;
        doc["rows"] = nlohmann::json::array();
        for (int i = 0; i < grid.n; ++i) doc["rows"].push_back({tau[i], density[i]});
        if (moments) {
            doc["mean"] = mean;
            doc["variance"] = variance;
        }
        emit(out, doc.dump(2) + "\n");
    }
    return kExitOk;
}

int run_estimate_cmd(const std::string& preset, const std::string& input_path,
                     const std::string& out) {
    using namespace properclock;
    EstimateInput input{};
    if (!input_path.empty())
        input = load_estimate_input(input_path);
    else if (preset == "rb87")
        input = rb87_preset();
    else
        throw std::invalid_argument("estimate: preset must be rb87 or --input must be given");
    emit(out, estimate_report_json(run_estimate(input)));
    return kExitOk;
}

int run_verify_cmd(const std::string& suite, double hook_mu_scale, bool hook_window_shrink,
                   const std::string& out) {
    using namespace properclock;
    VerifyHooks hooks;
    hooks.mu_scale = hook_mu_scale;
    hooks.window_shrink = hook_window_shrink;
    const VerifyReport report = run_verify(suite, hooks);
    emit(out, verify_report_json(report));
    return report.all_passed() ? kExitOk : kExitVerifyFailure;
}

int run_povm_check_cmd(const std::string& model_name, double omega, double sigma, int resolution,
                       double shift, const std::string& out) {
    using namespace properclock;
    ClockModel model = IdealContinuousClock{sigma};
    if (model_name == "two-level")
        model = make_two_level(omega);
    else if (model_name != "continuous")
        throw std::invalid_argument("povm-check: model must be two-level or continuous");

    nlohmann::json doc;
    doc["model"] = model_name;
    doc["completeness_deviation"] = povm_completeness(model, resolution);
    doc["covariance_deviation"] = covariance_check(model, shift, resolution);
    if (const auto* tl = std::get_if<TwoLevelClock>(&model)) doc["mu"] = tl->mu;
    emit(out, doc.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relativistic quantum clock simulator and verifier"};
    app.require_subcommand(1);

    std::string out = "stdout";
    std::string format = "csv";
    app.add_option("--out", out, "output path or 'stdout'")->capture_default_str();
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "dilation-factor sweeps over dp or theta");
    std::string axis, grid;
    double ptot = 0.0, dp = 0.17, theta = 0.0, phi = 0.0, delta = 0.01;
    sweep->add_option("--axis", axis, "dp or theta")->required();
    sweep->add_option("--grid", grid, "lo:hi:n for the swept axis")->required();
    sweep->add_option("--ptot", ptot, "pbar + pbar_prime, units of mc")->capture_default_str();
    sweep->add_option("--dp", dp, "fixed momentum difference for theta sweeps")
        ->capture_default_str();
    sweep->add_option("--theta", theta, "fixed weight angle for dp sweeps")->capture_default_str();
    sweep->add_option("--phi", phi, "relative phase")->capture_default_str();
    sweep->add_option("--delta", delta, "momentum spread, units of mc")->capture_default_str();

    auto* pdist = app.add_subcommand("pdist", "conditional proper-time density");
    std::string scenario_path, engine = "analytic";
    double tau_b = 0.0;
    std::string pdist_grid;
    bool moments = false;
    pdist->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    pdist->add_option("--tau-b", tau_b, "conditioning clock reading")->required();
    pdist->add_option("--grid", pdist_grid, "lo:hi:n for tau_a")->required();
    pdist->add_option("--engine", engine, "analytic, quadrature or nonperturbative")
        ->capture_default_str();
    pdist->add_flag("--moments", moments, "append mean and variance rows");

    auto* estimate = app.add_subcommand("estimate", "laboratory feasibility estimate");
    std::string preset = "rb87", input_path;
    estimate->add_option("--preset", preset, "rb87")->capture_default_str();
    estimate->add_option("--input", input_path, "custom estimate JSON file");

    auto* verify = app.add_subcommand("verify", "invariant suites");
    std::string suite = "all";
    double hook_mu_scale = 1.0;
    bool hook_window_shrink = false;
    verify->add_option("suite", suite, "analytic, oracle, metrology or all")
        ->capture_default_str();
    verify->add_option("--hook-mu-scale", hook_mu_scale, "fault injection: scale the POVM weight")
        ->capture_default_str();
    verify->add_flag("--hook-window-shrink", hook_window_shrink,
                     "fault injection: truncate the quadrature window");

    auto* povm = app.add_subcommand("povm-check", "POVM completeness and covariance");
    std::string model_name = "two-level";
    double omega = 1.0, sigma = 1.0, shift = 0.5;
    int resolution = 4096;
    povm->add_option("--model", model_name, "two-level or continuous")->capture_default_str();
    povm->add_option("--omega", omega, "two-level angular frequency")->capture_default_str();
    povm->add_option("--sigma", sigma, "continuous fiducial width")->capture_default_str();
    povm->add_option("--resolution", resolution, "grid resolution")->capture_default_str();
    povm->add_option("--shift", shift, "covariance test shift")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (sweep->parsed())
            return run_sweep_cmd(axis, grid, ptot, dp, theta, phi, delta, out, format);
        if (pdist->parsed())
            return run_pdist_cmd(scenario_path, tau_b, pdist_grid, engine, moments, out, format);
        if (estimate->parsed()) return run_estimate_cmd(preset, input_path, out);
        if (verify->parsed()) return run_verify_cmd(suite, hook_mu_scale, hook_window_shrink, out);
        if (povm->parsed())
            return run_povm_check_cmd(model_name, omega, sigma, resolution, shift, out);
    } catch (const properclock::ScenarioLoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const properclock::QuadratureError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return kExitOk;
}
