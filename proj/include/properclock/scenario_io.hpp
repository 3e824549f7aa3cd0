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

#include <stdexcept>
#include <string>

#include "properclock/states.hpp"

namespace properclock {

namespace constants {
inline constexpr double c = 299792458.0;            // m/s
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double h = 6.62607015e-34;         // J s
}  // namespace constants

/// Schema or value error in a scenario document; maps to exit code 2.
struct ScenarioLoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses a scenario JSON document. SI inputs (momenta in kg m/s, sigma
/// in seconds, mass_kg) are converted to natural units here; the
/// returned Scenario is always natural with unit mass. Unknown keys are
/// rejected at every nesting level.
Scenario parse_scenario(const std::string& json_text);

Scenario load_scenario(const std::string& path);

/// SI <-> natural conversions used at the boundary.
double momentum_si_to_natural(double p_si, double mass_kg);
double momentum_natural_to_si(double p_nat, double mass_kg);
double sigma_seconds_to_natural(double sigma_s, double mass_kg);
double sigma_natural_to_seconds(double sigma_nat, double mass_kg);

}  // namespace properclock
