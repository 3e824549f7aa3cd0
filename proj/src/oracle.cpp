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

#include "properclock/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "properclock/fft.hpp"

namespace properclock {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

double require_x_aligned(const Eigen::Vector3d& p, const char* what) {
    if (p.y() != 0.0 || p.z() != 0.0)
        throw std::invalid_argument(std::string(what) +
                                    ": spectral oracle supports x-aligned momenta only");
    return p.x();
}

// 1D momentum-space amplitude of a Gaussian packet, unit L2 norm.
double packet_amplitude(double p, double pbar, double delta) {
    const double u = (p - pbar) / delta;
    return std::exp(-0.5 * u * u) / (std::pow(kPi, 0.25) * std::sqrt(delta));
}

std::complex<double> cm_amplitude(const CenterOfMass& cm, double p) {
    if (const auto* g = std::get_if<GaussianPacket>(&cm))
        return packet_amplitude(p, g->pbar.x(), g->delta);
    const auto& sup = std::get<MomentumSuperposition>(cm);
    const std::complex<double> phase(std::cos(sup.phi), std::sin(sup.phi));
    const double a = packet_amplitude(p, sup.first.pbar.x(), sup.first.delta);
    const double b = packet_amplitude(p, sup.second.pbar.x(), sup.second.delta);
    return (std::cos(sup.theta) * a + phase * std::sin(sup.theta) * b) / sup.norm;
}

void cm_momentum_span(const CenterOfMass& cm, double& lo, double& hi, double& min_delta) {
    if (const auto* g = std::get_if<GaussianPacket>(&cm)) {
        lo = g->pbar.x() - 10.0 * g->delta;
        hi = g->pbar.x() + 10.0 * g->delta;
        min_delta = g->delta;
        require_x_aligned(g->pbar, "cm packet");
        return;
    }
    const auto& sup = std::get<MomentumSuperposition>(cm);
    require_x_aligned(sup.first.pbar, "cm packet");
    require_x_aligned(sup.second.pbar, "cm packet");
    lo = std::min(sup.first.pbar.x(), sup.second.pbar.x()) - 10.0 * sup.first.delta;
    hi = std::max(sup.first.pbar.x(), sup.second.pbar.x()) + 10.0 * sup.first.delta;
    min_delta = sup.first.delta;
}

// Exact dispersion relative to the rest energy, natural units (m = c = 1).
double exact_energy(double p, double k) {
    return std::sqrt(p * p + (1.0 + k) * (1.0 + k)) - 1.0;
}

// Per-particle spectral evolution engine: psi_cm(p) x psi_clock(k) with
// diagonal phases, transformed k -> tau on demand.
class ParticleEngine {
public:
    ParticleEngine(const CenterOfMass& cm, double sigma, const SpectralGrid& g) {
        n_tau_ = g.n_tau;
        n_p_ = g.n_p;
        tau_c_ = g.tau_center;
        const double half = g.tau_extent * sigma;
        d_tau_ = 2.0 * half / n_tau_;
        d_k_ = 2.0 * kPi / (2.0 * half);

        // momentum nodes and packet density weights (midpoint rule)
        const double p_lo = g.p_center - g.p_extent;
        const double dp = 2.0 * g.p_extent / n_p_;
        p_nodes_.resize(n_p_);
        p_weights_.resize(n_p_);
        for (int i = 0; i < n_p_; ++i) {
            p_nodes_[i] = p_lo + (i + 0.5) * dp;
            p_weights_[i] = std::norm(cm_amplitude(cm, p_nodes_[i])) * dp;
        }

        // clock fiducial in the k representation, (sigma^2/pi)^(1/4) e^{-k^2 sigma^2 / 2}
        clock_k_.resize(n_tau_);
        k_nodes_.resize(n_tau_);
        const double amp0 = std::pow(sigma * sigma / kPi, 0.25);
        for (int idx = 0; idx < n_tau_; ++idx) {
            const double k = (idx - n_tau_ / 2) * d_k_;
            k_nodes_[idx] = k;
            clock_k_[idx] = amp0 * std::exp(-0.5 * k * k * sigma * sigma);
        }

        energies_.resize(static_cast<std::size_t>(n_p_) * n_tau_);
        for (int i = 0; i < n_p_; ++i)
            for (int idx = 0; idx < n_tau_; ++idx)
                energies_[static_cast<std::size_t>(i) * n_tau_ + idx] =
                    exact_energy(p_nodes_[i], k_nodes_[idx]);
    }

    int n_tau() const { return n_tau_; }
    double tau_at(int j) const { return tau_c_ + (j - n_tau_ / 2) * d_tau_; }
    double d_tau() const { return d_tau_; }

    // Clock amplitude in the tau representation for momentum slice i at
    // time t, written into `out` (FFT index order a; tau index j below).
    void slice_amplitude(int i, double t, std::vector<std::complex<double>>& out) const {
        out.resize(n_tau_);
        const double pref = d_k_ / std::sqrt(2.0 * kPi);
        const std::size_t base = static_cast<std::size_t>(i) * n_tau_;
        for (int idx = 0; idx < n_tau_; ++idx) {
            const int m = idx - n_tau_ / 2;
            const double phase = -energies_[base + idx] * t + m * d_k_ * tau_c_;
            std::complex<double> v =
                clock_k_[idx] * std::complex<double>(std::cos(phase), std::sin(phase)) * pref;
            if (m & 1) v = -v;
            const int a = (m >= 0) ? m : m + n_tau_;
            out[a] = v;
        }
        fft_pow2(out, +1);  // out[j] = amplitude at tau_j, j = 0..n_tau-1
    }

    // f(tau_j, t) = sum_i w_i |phi_i(tau_j, t)|^2, accumulated over p.
    void density_profile(double t, std::vector<double>& out) const {
        out.assign(n_tau_, 0.0);
        std::vector<std::complex<double>> scratch;
        for (int i = 0; i < n_p_; ++i) {
            if (p_weights_[i] < 1e-300) continue;
            slice_amplitude(i, t, scratch);
            for (int j = 0; j < n_tau_; ++j) out[j] += p_weights_[i] * std::norm(scratch[j]);
        }
    }

    // f(tau, t) at a single tau by direct k-summation.
    double density_at(double tau, double t) const {
        const double pref = d_k_ / std::sqrt(2.0 * kPi);
        double f = 0.0;
        for (int i = 0; i < n_p_; ++i) {
            if (p_weights_[i] < 1e-300) continue;
            const std::size_t base = static_cast<std::size_t>(i) * n_tau_;
            std::complex<double> s(0.0, 0.0);
            for (int idx = 0; idx < n_tau_; ++idx) {
                const double phase = -energies_[base + idx] * t + k_nodes_[idx] * tau;
                s += clock_k_[idx] * std::complex<double>(std::cos(phase), std::sin(phase));
            }
            f += p_weights_[i] * std::norm(s * pref);
        }
        return f;
    }

    // Reduced clock density matrix at time t, rho(tau_j, tau_l) * d_tau.
    Eigen::MatrixXcd reduced_state(double t) const {
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n_tau_, n_tau_);
        std::vector<std::complex<double>> scratch;
        for (int i = 0; i < n_p_; ++i) {
            if (p_weights_[i] < 1e-300) continue;
            slice_amplitude(i, t, scratch);
            Eigen::Map<const Eigen::VectorXcd> phi(scratch.data(), n_tau_);
            rho.noalias() += p_weights_[i] * (phi * phi.adjoint());
        }
        return rho * d_tau_;
    }

private:
    int n_tau_ = 0, n_p_ = 0;
    double tau_c_ = 0.0, d_tau_ = 0.0, d_k_ = 0.0;
    std::vector<double> p_nodes_, p_weights_, k_nodes_, energies_;
    std::vector<std::complex<double>> clock_k_;
};

void require_natural_aligned(const Scenario& scenario) {
    if (scenario.units != UnitSystem::natural || scenario.mass != 1.0)
        throw std::invalid_argument(
            "nonperturbative oracle requires natural units with unit mass");
    if (const auto* g = std::get_if<GaussianPacket>(&scenario.cm_a)) {
        require_x_aligned(g->pbar, "cm_a");
    } else {
        const auto& sup = std::get<MomentumSuperposition>(scenario.cm_a);
        require_x_aligned(sup.first.pbar, "cm_a");
        require_x_aligned(sup.second.pbar, "cm_a");
    }
    require_x_aligned(scenario.cm_b.pbar, "cm_b");
}

void default_window(const Scenario& scenario, double tau_a, double tau_b, QuadratureSpec& spec,
                    bool auto_extend) {
    const double sigma = scenario.sigma();
    const double lo = std::min(tau_a, tau_b);
    const double hi = std::max(tau_a, tau_b);
    if (spec.t_lo == spec.t_hi) {
        spec.t_lo = lo - 12.0 * sigma;
        spec.t_hi = hi + 12.0 * sigma;
    } else if (auto_extend) {
        spec.t_lo = std::min(spec.t_lo, lo - 8.0 * sigma);
        spec.t_hi = std::max(spec.t_hi, hi + 8.0 * sigma);
    }
    if (!(spec.t_lo < spec.t_hi))
        throw std::invalid_argument("quadrature window is empty");
}

SpectralGrid half_resolution(const SpectralGrid& g) {
    SpectralGrid h = g;
    h.n_tau = std::max(64, g.n_tau / 2);
    h.n_p = std::max(64, g.n_p / 2);
    return h;
}

struct RawProfile {
    std::vector<double> tau;        // tau grid of clock A
    std::vector<double> numerator;  // int dt f_A(tau, t) f_B(tau_b, t)
    double denominator = 0.0;       // int dt f_B(tau_b, t)
    double t_error = 0.0;           // sup-norm change at the last refinement
};

// Trapezoid over the t-window with nested refinement of the node count.
RawProfile integrate_profiles(const Scenario& scenario, double tau_b, const SpectralGrid& grid,
                              const QuadratureSpec& spec) {
    ParticleEngine engine_a(scenario.cm_a, scenario.sigma(), grid);
    ParticleEngine engine_b(scenario.cm_b, scenario.sigma(), grid);

    const int n = engine_a.n_tau();
    RawProfile out;
    out.tau.resize(n);
    for (int j = 0; j < n; ++j) out.tau[j] = engine_a.tau_at(j);

    const double lo = spec.t_lo, hi = spec.t_hi;
    std::vector<double> num_prev, profile;
    double den_prev = 0.0;

    auto add_node = [&](double t, double w, std::vector<double>& num_acc, double& den_acc) {
        engine_a.density_profile(t, profile);
        const double fb = engine_b.density_at(tau_b, t);
        for (int j = 0; j < n; ++j) num_acc[j] += w * profile[j] * fb;
        den_acc += w * fb;
    };

    int n_t = 64;
    double dt = (hi - lo) / n_t;
    std::vector<double> num(n, 0.0);
    double den = 0.0;
    add_node(lo, 0.5 * dt, num, den);
    add_node(hi, 0.5 * dt, num, den);
    for (int i = 1; i < n_t; ++i) add_node(lo + i * dt, dt, num, den);

    const int max_levels = 5;
    for (int level = 0; level < max_levels; ++level) {
        // refine: halve dt, add midpoints
        std::vector<double> num_f(n, 0.0);
        double den_f = 0.0;
        for (int i = 0; i < n_t; ++i) add_node(lo + (i + 0.5) * dt, dt, num_f, den_f);
        for (int j = 0; j < n; ++j) num_f[j] = 0.5 * (num_f[j] + num[j]);
        den_f = 0.5 * (den_f + den);
        n_t *= 2;
        dt *= 0.5;

        double diff = std::abs(den_f - den);
        double scale = std::abs(den_f);
        for (int j = 0; j < n; ++j) {
            diff = std::max(diff, std::abs(num_f[j] - num[j]));
            scale = std::max(scale, std::abs(num_f[j]));
        }
        num_prev = std::move(num);
        den_prev = den;
        num = std::move(num_f);
        den = den_f;
        out.t_error = diff;
        if (diff <= std::max(spec.abs_tol, spec.rel_tol * scale) && level >= 1) break;
        if (level == max_levels - 1 && diff > 1e3 * std::max(spec.abs_tol, spec.rel_tol * scale))
            throw QuadratureError("nonperturbative t-integration failed to converge", den, diff);
    }
    (void)den_prev;
    out.numerator = std::move(num);
    out.denominator = den;
    return out;
}

SampledDensity assemble_density(const RawProfile& raw) {
    SampledDensity d;
    d.tau = raw.tau;
    d.density.resize(raw.tau.size());
    for (std::size_t j = 0; j < raw.tau.size(); ++j)
        d.density[j] = raw.numerator[j] / raw.denominator;
    d.error_estimate = raw.t_error / raw.denominator;
    return d;
}

void check_boundaries(const SampledDensity& d) {
    double peak = 0.0;
    for (double v : d.density) peak = std::max(peak, std::abs(v));
    const double edge = std::max(std::abs(d.density.front()), std::abs(d.density.back()));
    if (edge > 1e-12 * peak)
        throw std::runtime_error(
            "spectral grid boundary leakage above threshold (edge " + std::to_string(edge) +
            ", peak " + std::to_string(peak) + "); enlarge tau_extent");
}

}  // namespace

void SpectralGrid::validate() const {
    if (!is_pow2(n_tau) || n_tau < 64 || !is_pow2(n_p) || n_p < 64)
        throw std::invalid_argument("SpectralGrid: n_tau and n_p must be powers of two >= 64");
    if (!(tau_extent > 0.0) || !(p_extent > 0.0))
        throw std::invalid_argument("SpectralGrid: extents must be positive");
}

SpectralGrid SpectralGrid::suggest(const Scenario& scenario, double tau_b) {
    double lo_a, hi_a, da, lo_b, hi_b, db;
    cm_momentum_span(scenario.cm_a, lo_a, hi_a, da);
    CenterOfMass b = scenario.cm_b;
    cm_momentum_span(b, lo_b, hi_b, db);
    const double lo = std::min(lo_a, lo_b), hi = std::max(hi_a, hi_b);
    const double min_delta = std::min(da, db);

    SpectralGrid g;
    g.p_center = 0.5 * (lo + hi);
    g.p_extent = 0.5 * (hi - lo);
    g.tau_center = tau_b;
    g.tau_extent = 18.0;
    const double sigma = scenario.sigma();
    // >= 16 points per sigma and per packet spread
    int n_tau = 64;
    while (n_tau < 16.0 * 2.0 * g.tau_extent && n_tau < (1 << 14)) n_tau *= 2;
    g.n_tau = n_tau;
    int n_p = 64;
    while (n_p < 16.0 * 2.0 * g.p_extent / min_delta && n_p < (1 << 14)) n_p *= 2;
    g.n_p = n_p;
    (void)sigma;
    return g;
}

double SampledDensity::normalization() const {
    double z = 0.0;
    for (std::size_t j = 0; j + 1 < tau.size(); ++j)
        z += 0.5 * (tau[j + 1] - tau[j]) * (density[j] + density[j + 1]);
    return z;
}

double SampledDensity::mean() const {
    double z = 0.0, m = 0.0;
    for (std::size_t j = 0; j + 1 < tau.size(); ++j) {
        const double w = 0.5 * (tau[j + 1] - tau[j]);
        z += w * (density[j] + density[j + 1]);
        m += w * (density[j] * tau[j] + density[j + 1] * tau[j + 1]);
    }
    return m / z;
}

DensityResult leading_order_density(const Scenario& scenario, double tau_a, double tau_b,
                                    const QuadratureSpec& spec_in, bool auto_extend) {
    QuadratureSpec spec = spec_in;
    default_window(scenario, tau_a, tau_b, spec, auto_extend);

    const double sigma = scenario.sigma();
    const double h_a = kinetic_energy_mean(scenario.cm_a, scenario.mass);
    const double h_b = kinetic_energy_mean(scenario.cm_b, scenario.mass);

    const double inv_sqrt_pi_sigma = 1.0 / (std::sqrt(kPi) * sigma);
    auto gauss = [&](double tau, double t) {
        const double u = (tau - t) / sigma;
        return std::exp(-u * u) * inv_sqrt_pi_sigma;
    };
    auto corr = [&](double h, double tau, double t) {
        return -2.0 * h * t * (tau - t) / (sigma * sigma);
    };

    // Strict first order in <H>/mc^2: numerator N0 + N1, denominator D0 + D1,
    // assembled as N0 + N1 - N0 (D0 - 1 + D1).
    auto n0 = integrate([&](double t) { return gauss(tau_a, t) * gauss(tau_b, t); }, spec);
    auto n1 = integrate(
        [&](double t) {
            return gauss(tau_a, t) * gauss(tau_b, t) *
                   (corr(h_a, tau_a, t) + corr(h_b, tau_b, t));
        },
        spec);
    auto d0 = integrate([&](double t) { return gauss(tau_b, t); }, spec);
    auto d1 = integrate([&](double t) { return gauss(tau_b, t) * corr(h_b, tau_b, t); }, spec);

    DensityResult r;
    r.value = n0.value + n1.value - n0.value * (d0.value - 1.0 + d1.value);
    r.error_estimate = n0.error_estimate + n1.error_estimate +
                       std::abs(n0.value) * (d0.error_estimate + d1.error_estimate);
    return r;
}

SampledDensity nonperturbative_distribution(const Scenario& scenario, double tau_b,
                                            const SpectralGrid& grid,
                                            const QuadratureSpec& spec_in) {
    grid.validate();
    require_natural_aligned(scenario);
    if (grid.n_tau < 4.0 * 2.0 * grid.tau_extent)
        throw std::invalid_argument("SpectralGrid under-resolves the fiducial (need >= 4/sigma)");

    QuadratureSpec spec = spec_in;
    default_window(scenario, tau_b, tau_b, spec, true);
    // tau coverage of the drifting packet is enforced a posteriori by the
    // boundary leakage check in check_boundaries
    SampledDensity fine = assemble_density(integrate_profiles(scenario, tau_b, grid, spec));
    check_boundaries(fine);

    // grid-refinement error estimate from a half-resolution run
    SampledDensity coarse =
        assemble_density(integrate_profiles(scenario, tau_b, half_resolution(grid), spec));
    double grid_err = 0.0;
    for (std::size_t j = 0; j < coarse.tau.size(); ++j) {
        // coarse tau nodes sit between fine ones when n is halved at the
        // same extent; interpolate fine onto the coarse node
        const double t = coarse.tau[j];
        const auto& ft = fine.tau;
        auto it = std::lower_bound(ft.begin(), ft.end(), t);
        if (it == ft.begin() || it == ft.end()) continue;
        const std::size_t hi = static_cast<std::size_t>(it - ft.begin());
        const double w = (t - ft[hi - 1]) / (ft[hi] - ft[hi - 1]);
        const double interp = (1.0 - w) * fine.density[hi - 1] + w * fine.density[hi];
        grid_err = std::max(grid_err, std::abs(interp - coarse.density[j]));
    }
    fine.error_estimate = std::max(fine.error_estimate, grid_err);
    return fine;
}

DensityResult nonperturbative_density(const Scenario& scenario, double tau_a, double tau_b,
                                      const SpectralGrid& grid, const QuadratureSpec& spec) {
    SampledDensity d = nonperturbative_distribution(scenario, tau_b, grid, spec);
    const auto& t = d.tau;
    if (tau_a < t.front() || tau_a > t.back())
        throw std::invalid_argument("tau_a outside the spectral tau grid");
    auto it = std::lower_bound(t.begin(), t.end(), tau_a);
    DensityResult r;
    if (it == t.begin()) {
        r.value = d.density.front();
    } else {
        const std::size_t hi = static_cast<std::size_t>(it - t.begin());
        const double w = (tau_a - t[hi - 1]) / (t[hi] - t[hi - 1]);
        r.value = (1.0 - w) * d.density[hi - 1] + w * d.density[hi];
    }
    r.error_estimate = d.error_estimate;
    return r;
}

double reduced_clock_state_check(const Scenario& scenario, double t, const SpectralGrid& grid) {
    grid.validate();
    require_natural_aligned(scenario);
    const double sigma = scenario.sigma();
    ParticleEngine engine(scenario.cm_a, sigma, grid);

    const Eigen::MatrixXcd rho_exact = engine.reduced_state(t);

    // model: freely evolved pure fiducial plus the first-order commutator term
    const int n = engine.n_tau();
    const double h = kinetic_energy_mean(scenario.cm_a, scenario.mass);
    Eigen::VectorXd psi(n), dpsi(n);
    const double amp = 1.0 / (std::pow(kPi, 0.25) * std::sqrt(sigma));
    for (int j = 0; j < n; ++j) {
        const double u = (engine.tau_at(j) - t) / sigma;
        psi(j) = amp * std::exp(-0.5 * u * u);
        dpsi(j) = -u / sigma * psi(j);
    }
    Eigen::MatrixXd model = psi * psi.transpose();
    model.noalias() += (t * h) * (dpsi * psi.transpose() + psi * dpsi.transpose());
    model *= engine.d_tau();

    Eigen::MatrixXcd diff = rho_exact - model.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace properclock
