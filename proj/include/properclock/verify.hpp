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

#include <string>
#include <vector>

namespace properclock {

/// Fault-injection hooks for negative-control testing: a completeness
/// weight miscalibration and a deliberately truncated quadrature window.
struct VerifyHooks {
    double mu_scale = 1.0;
    bool window_shrink = false;
};

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/// Runs the named invariant suite: "analytic", "oracle", "metrology" or
/// "all". Throws std::invalid_argument for an unknown suite name.
VerifyReport run_verify(const std::string& suite, const VerifyHooks& hooks = {});

std::string verify_report_json(const VerifyReport& report);

}  // namespace properclock
