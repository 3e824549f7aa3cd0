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

#include <optional>
#include <string>

namespace properclock {

/// Laboratory parameters for a quantum-dilation feasibility estimate:
/// an atom of mass `mass_kg` prepared in a superposition of velocities
/// v_bar and v_bar_prime (m/s), trapped at radius `radius_m` which sets
/// the momentum spread, read out by a clock of resolution `resolution_s`.
struct EstimateInput {
    double mass_kg;
    double v_bar;
    double v_bar_prime;
    double theta;
    double phi;
    double radius_m;
    double resolution_s;
};

/// Rubidium-87 style parameters: m = 1.4e-25 kg, velocities 5 and 15 m/s,
/// theta = 3 pi / 4, phi = 0, trap radius 2.5e-10 m, resolution 1e-14 s.
EstimateInput rb87_preset();

/// Loads a custom estimate input from JSON with exactly the EstimateInput
/// keys; throws ScenarioLoadError on schema violations.
EstimateInput load_estimate_input(const std::string& path);

struct EstimateReport {
    double gamma_q_inv = 0.0;
    double gamma_c_inv = 0.0;
    double clock_resolution_s = 0.0;
    /// resolution / |gamma_q_inv|: time for the quantum correction to
    /// accumulate one resolvable tick. Unbounded when gamma_q_inv = 0.
    std::optional<double> required_coherence_time_s;
};

EstimateReport run_estimate(const EstimateInput& input);

std::string estimate_report_json(const EstimateReport& report);

}  // namespace properclock
