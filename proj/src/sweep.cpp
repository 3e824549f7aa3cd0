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

#include "properclock/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "properclock/analytic.hpp"

namespace properclock {

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char trailing;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.lo, &g.hi, &g.n, &trailing) != 3)
        throw std::invalid_argument("grid: expected lo:hi:n, got '" + text + "'");
    if (g.n < 2) throw std::invalid_argument("grid: need at least 2 points");
    if (!(g.lo < g.hi)) throw std::invalid_argument("grid: require lo < hi");
    return g;
}

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PROPERCLOCK_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

SweepRow evaluate_row(const SweepConfig& c, double axis_value) {
    SweepRow row;
    row.dp_over_mc = (c.axis == SweepAxis::dp) ? axis_value : c.dp;
    row.theta = (c.axis == SweepAxis::theta) ? axis_value : c.theta;
    row.ptot_over_mc = c.ptot;
    row.phi = c.phi;
    row.delta_over_mc = c.delta;

    const double pbar = 0.5 * (row.ptot_over_mc - row.dp_over_mc);
    const double pbar_prime = 0.5 * (row.ptot_over_mc + row.dp_over_mc);
    const MomentumSuperposition sup(GaussianPacket(pbar, c.delta),
                                    GaussianPacket(pbar_prime, c.delta), row.theta, row.phi);
    const GaussianPacket rest(0.0, c.delta);
    const DilationFactors d = dilation_factors(sup, rest, 1.0);
    row.gamma_c_inv = d.gamma_c_inv;
    row.gamma_q_inv = d.gamma_q_inv;
    if (!std::isfinite(row.gamma_c_inv) || !std::isfinite(row.gamma_q_inv))
        throw std::runtime_error("sweep: non-finite dilation factor");
    return row;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, int threads) {
    if (config.grid.n < 2) throw std::invalid_argument("sweep: need at least 2 grid points");
    const int n = config.grid.n;
    const int n_threads = std::min(resolve_threads(threads), n);

    SweepResult result;
    result.rows.resize(n);
    std::vector<std::exception_ptr> errors(n_threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < n; i += n_threads)
                    result.rows[i] = evaluate_row(config, config.grid.at(i));
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    if (config.axis == SweepAxis::dp) {
        const auto best = std::max_element(
            result.rows.begin(), result.rows.end(), [](const SweepRow& a, const SweepRow& b) {
                return std::abs(a.gamma_q_inv) < std::abs(b.gamma_q_inv);
            });
        result.p_opt = best->dp_over_mc;
    }
    return result;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "dp_over_mc,ptot_over_mc,theta,phi,delta_over_mc,gamma_c_inv,gamma_q_inv\n";
    for (const SweepRow& r : rows) {
        out += format_sci(r.dp_over_mc);
        out += ',';
        out += format_sci(r.ptot_over_mc);
        out += ',';
        out += format_sci(r.theta);
        out += ',';
        out += format_sci(r.phi);
        out += ',';
        out += format_sci(r.delta_over_mc);
        out += ',';
        out += format_sci(r.gamma_c_inv);
        out += ',';
        out += format_sci(r.gamma_q_inv);
        out += '\n';
    }
    return out;
}

}  // namespace properclock
