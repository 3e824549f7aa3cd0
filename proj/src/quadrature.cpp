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

#include "properclock/quadrature.hpp"

#include <cmath>
#include <vector>

namespace properclock {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kNodes[i]);
        fv[14 - i] = f(c + h * kNodes[i]);
    }
    fv[7] = f(c);
    double kronrod = kWeights[7] * fv[7];
    double gauss = kGaussWeights[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kronrod += kWeights[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (fv[i] + fv[14 - i]);
    }
    kronrod *= h;
    gauss *= h;
    const double diff = std::abs(kronrod - gauss);
    // QUADPACK-style sharpened estimate; never below machine noise on the value.
    double err = diff;
    if (diff > 0.0) err = std::min(diff, 200.0 * diff * std::sqrt(diff));
    err = std::max(err, 50.0 * 1e-17 * std::abs(kronrod));
    return {kronrod, err};
}

struct Worker {
    const std::function<double(double)>& f;
    double rel_tol;
    double abs_tol;
    int max_subdivisions;
    int used = 0;
    double scale = 0.0;  // running magnitude for the relative tolerance

    Panel refine(double lo, double hi, const Panel& coarse, int depth) {
        const double tol = std::max(abs_tol, rel_tol * scale) *
                           std::max(1e-3, (hi - lo) / full_width);
        if (coarse.error <= tol || depth >= 48) return coarse;
        if (used >= max_subdivisions)
            throw QuadratureError(
                "quadrature failed to converge: subdivision budget exhausted "
                "(window too small or tolerance unreachable)",
                coarse.value, coarse.error);
        ++used;
        const double mid = 0.5 * (lo + hi);
        Panel left = gk15(f, lo, mid);
        Panel right = gk15(f, mid, hi);
        scale = std::max(scale, std::abs(left.value) + std::abs(right.value));
        left = refine(lo, mid, left, depth + 1);
        right = refine(mid, hi, right, depth + 1);
        return {left.value + right.value, left.error + right.error};
    }

    double full_width = 1.0;
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double rel_tol, double abs_tol, int max_subdivisions) {
    if (!(hi > lo)) throw std::invalid_argument("integrate: require lo < hi");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("integrate: tolerances must be positive");
    Worker w{f, rel_tol, abs_tol, max_subdivisions};
    w.full_width = hi - lo;
    // Seed with a few panels so narrow features inside a wide window are seen.
    constexpr int kSeed = 8;
    double value = 0.0, error = 0.0;
    std::vector<Panel> seeds(kSeed);
    const double step = (hi - lo) / kSeed;
    for (int i = 0; i < kSeed; ++i) {
        seeds[i] = gk15(f, lo + i * step, lo + (i + 1) * step);
        w.scale += std::abs(seeds[i].value);
    }
    for (int i = 0; i < kSeed; ++i) {
        Panel p = w.refine(lo + i * step, lo + (i + 1) * step, seeds[i], 0);
        value += p.value;
        error += p.error;
    }
    // judge the residual against the magnitude of the integrand, not the
    // (possibly cancelling) value
    const double tol = std::max(abs_tol, rel_tol * std::max(std::abs(value), w.scale));
    if (error > tol * 10.0)
        throw QuadratureError("quadrature failed to converge: residual error " +
                                  std::to_string(error) + " above tolerance " +
                                  std::to_string(tol),
                              value, error);
    return {value, error, w.used};
}

QuadratureResult integrate(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    return integrate(f, spec.t_lo, spec.t_hi, spec.rel_tol, spec.abs_tol, spec.max_subdivisions);
}

}  // namespace properclock
