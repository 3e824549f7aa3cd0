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

#include <functional>
#include <stdexcept>
#include <string>

namespace properclock {

/// Integration window and tolerances for the t-integrals of the oracle.
struct QuadratureSpec {
    double t_lo = 0.0;
    double t_hi = 0.0;  ///< when t_lo == t_hi the window is derived from the scenario
    double rel_tol = 1e-11;
    double abs_tol = 1e-14;
    int max_subdivisions = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

/// Raised when the requested tolerance cannot be met; carries diagnostics.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double best_value, double best_error)
        : std::runtime_error(msg), value(best_value), error_estimate(best_error) {}
    double value;
    double error_estimate;
};

/// Adaptive Gauss-Kronrod 7/15 integration with nested error estimates.
/// Deterministic: intervals are refined depth-first in a fixed order.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double rel_tol = 1e-11, double abs_tol = 1e-14,
                           int max_subdivisions = 4000);

QuadratureResult integrate(const std::function<double(double)>& f, const QuadratureSpec& spec);

}  // namespace properclock
