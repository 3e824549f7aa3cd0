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
#include <vector>

namespace properclock {

/// Uniform grid lo:hi:n with n >= 2 and lo < hi.
struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;

    double at(int i) const { return lo + (hi - lo) * i / (n - 1); }
};

/// Parses "lo:hi:n"; throws std::invalid_argument on malformed input.
GridSpec parse_grid(const std::string& text);

enum class SweepAxis { dp, theta };

/// One point of a dilation-factor sweep over a superposed clock A
/// against a clock B at rest with the same spread.
struct SweepRow {
    double dp_over_mc;
    double ptot_over_mc;
    double theta;
    double phi;
    double delta_over_mc;
    double gamma_c_inv;
    double gamma_q_inv;
};

struct SweepConfig {
    SweepAxis axis = SweepAxis::theta;
    GridSpec grid;            ///< values of the swept axis
    double ptot = 0.0;        ///< pbar + pbar_prime, units of mc
    double dp = 0.17;         ///< pbar_prime - pbar, fixed for theta sweeps
    double theta = 0.0;       ///< fixed for dp sweeps
    double phi = 0.0;
    double delta = 0.01;      ///< shared momentum spread, units of mc
};

struct SweepResult {
    std::vector<SweepRow> rows;             ///< input-grid order
    std::optional<double> p_opt;            ///< dp with largest |gamma_q_inv| (dp axis)
};

/// Evaluates the sweep, parallelized across rows; `threads` <= 0 means
/// use the PROPERCLOCK_THREADS cap or the hardware concurrency.
SweepResult run_sweep(const SweepConfig& config, int threads = 0);

/// Fixed-width scientific formatting, 17 significant digits, used for
/// all numeric CSV output so identical inputs give identical bytes.
std::string format_sci(double v);

/// CSV document with the canonical sweep header and \n line endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace properclock
