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

#include "properclock/estimate.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "properclock/analytic.hpp"
#include "properclock/scenario_io.hpp"

namespace properclock {

EstimateInput rb87_preset() {
    EstimateInput in;
    in.mass_kg = 1.4e-25;
    in.v_bar = 5.0;
    in.v_bar_prime = 15.0;
    in.theta = 3.0 * std::numbers::pi / 4.0;
    in.phi = 0.0;
    in.radius_m = 2.5e-10;
    in.resolution_s = 1e-14;
    return in;
}

EstimateInput load_estimate_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ScenarioLoadError("estimate: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioLoadError(std::string("estimate: invalid JSON: ") + e.what());
    }
    const char* keys[] = {"mass_kg", "v_bar",    "v_bar_prime", "theta",
                          "phi",     "radius_m", "resolution_s"};
    if (!doc.is_object()) throw ScenarioLoadError("estimate: expected an object");
    for (const auto& [key, _] : doc.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) throw ScenarioLoadError("estimate: unknown key '" + key + "'");
    }
    EstimateInput in;
    auto num = [&](const char* key) {
        if (!doc.contains(key) || !doc.at(key).is_number())
            throw ScenarioLoadError(std::string("estimate: missing numeric key '") + key + "'");
        return doc.at(key).get<double>();
    };
    in.mass_kg = num("mass_kg");
    in.v_bar = num("v_bar");
    in.v_bar_prime = num("v_bar_prime");
    in.theta = num("theta");
    in.phi = num("phi");
    in.radius_m = num("radius_m");
    in.resolution_s = num("resolution_s");
    if (!(in.mass_kg > 0.0) || !(in.radius_m > 0.0) || !(in.resolution_s > 0.0))
        throw ScenarioLoadError("estimate: mass_kg, radius_m, resolution_s must be positive");
    return in;
}

EstimateReport run_estimate(const EstimateInput& input) {
    // trap of radius r confines the wave packet, setting the momentum
    // spread via delta = h / r
    const double delta_si = constants::h / input.radius_m;
    const double delta = momentum_si_to_natural(delta_si, input.mass_kg);
    const double pbar = momentum_si_to_natural(input.mass_kg * input.v_bar, input.mass_kg);
    const double pbar_prime =
        momentum_si_to_natural(input.mass_kg * input.v_bar_prime, input.mass_kg);

    const MomentumSuperposition sup(GaussianPacket(pbar, delta), GaussianPacket(pbar_prime, delta),
                                    input.theta, input.phi);
    const GaussianPacket rest(0.0, delta);
    const DilationFactors d = dilation_factors(sup, rest, 1.0);

    EstimateReport report;
    report.gamma_q_inv = d.gamma_q_inv;
    report.gamma_c_inv = d.gamma_c_inv;
    report.clock_resolution_s = input.resolution_s;
    if (d.gamma_q_inv != 0.0)
        report.required_coherence_time_s = input.resolution_s / std::abs(d.gamma_q_inv);
    return report;
}

std::string estimate_report_json(const EstimateReport& report) {
    nlohmann::json doc;
    doc["gamma_q_inv"] = report.gamma_q_inv;
    doc["gamma_c_inv"] = report.gamma_c_inv;
    doc["clock_resolution_s"] = report.clock_resolution_s;
    if (report.required_coherence_time_s)
        doc["required_coherence_time_s"] = *report.required_coherence_time_s;
    else
        doc["required_coherence_time_s"] = nullptr;
    return doc.dump(2) + "\n";
}

}  // namespace properclock
