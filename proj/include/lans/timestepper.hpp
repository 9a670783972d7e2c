#pragma once

#include <cmath>
#include <stdexcept>

#include "lans/nonlinear.hpp"
#include "lans/time_grid.hpp"

namespace lans {

enum class Nonlinearity { lans, navier_stokes };

struct StepConfig {
    double dt = 1e-3;
    bool dealias_products = true;
    Nonlinearity mode = Nonlinearity::lans;

    void validate() const {
        if (!(dt > 0.0)) throw std::invalid_argument("StepConfig: dt > 0 required");
    }
};

struct BlowupError : std::runtime_error {
    double last_good_time;
    explicit BlowupError(double t)
        : std::runtime_error("blow-up detected at t = " + std::to_string(t)),
          last_good_time(t) {}
};

namespace detail {

/// Projected nonlinear forcing F(u) = -P(V^alpha(u,u)); alpha dropped in
/// Navier-Stokes mode.
inline SpectralField nonlinear_rhs(const SpectralField& u, const StepConfig& cfg,
                                   const AlphaParam& params) {
    const double a = cfg.mode == Nonlinearity::lans ? params.alpha : 0.0;
    SpectralField nl = v_alpha(u, u, a);
    SpectralField out = a > 0.0 ? stokes_project(nl, a) : leray_project(nl);
    out *= -1.0;
    return out;
}

} // namespace detail

/// One integrating-factor Heun step: the viscous part is integrated exactly
/// by the multiplier E = e^{-nu |k|^2 dt}, the projected nonlinearity by a
/// second-order explicit predictor-corrector,
///   u* = E (u + dt F(u)),  u_next = E u + dt/2 (E F(u) + F(u*)).
inline SpectralField step(const SpectralField& u, const StepConfig& cfg, const AlphaParam& params) {
    cfg.validate();
    const double dt = cfg.dt;
    auto damp = [&](const SpectralField& f) {
        return apply_multiplier(f, [dt, nu = params.nu](double k2) { return std::exp(-nu * k2 * dt); });
    };

    SpectralField k1 = detail::nonlinear_rhs(u, cfg, params);
    SpectralField pred = u + dt * k1;
    pred = damp(pred);
    SpectralField k2 = detail::nonlinear_rhs(pred, cfg, params);

    SpectralField out = damp(u + (0.5 * dt) * k1);
    out += (0.5 * dt) * k2;
    out = leray_project(out);
    if (cfg.dealias_products) out = dealias(out);
    return out;
}

struct EvolveResult {
    Trajectory trajectory;
    std::vector<double> requested_times;
    std::vector<double> div_residuals;
};

/// March phi forward to time T with fixed steps and sample at the nearest
/// completed step to each node of sample_times.  Blow-up (non-finite
/// coefficients or E_alpha growth above 10% in one step) raises BlowupError
/// carrying the last good time.
inline EvolveResult evolve(const SpectralField& phi, double T, const StepConfig& cfg,
                           const AlphaParam& params, const TimeGrid& sample_times) {
    cfg.validate();
    EvolveResult res;
    res.trajectory.time_grid.horizon = T;

    if (T <= 0.0) {
        res.trajectory.time_grid.nodes = {0.0};
        res.trajectory.states.push_back(phi);
        res.requested_times = {0.0};
        res.div_residuals = {divergence_residual(phi)};
        return res;
    }
    sample_times.validate();

    const long nsteps = std::lround(T / cfg.dt);
    if (nsteps < 1) throw std::invalid_argument("evolve: dt larger than horizon");

    SpectralField u = phi;
    double e_prev = energy_alpha(u, params.alpha);
    std::size_t next_sample = 0;
    auto record = [&](double t) {
        res.trajectory.time_grid.nodes.push_back(t);
        res.trajectory.states.push_back(u);
        res.requested_times.push_back(sample_times.nodes[next_sample]);
        res.div_residuals.push_back(divergence_residual(u));
        ++next_sample;
    };
    auto take_sample = [&](double t) {
        while (next_sample < sample_times.count() &&
               t + 0.5 * cfg.dt >= sample_times.nodes[next_sample])
            record(t);
    };

    take_sample(0.0);
    for (long m = 0; m < nsteps; ++m) {
        const double t_prev = cfg.dt * static_cast<double>(m);
        u = step(u, cfg, params);
        if (!u.all_finite()) throw BlowupError(t_prev);
        const double e_now = energy_alpha(u, params.alpha);
        if (e_now > 1.1 * e_prev && e_prev > 0.0) throw BlowupError(t_prev);
        e_prev = e_now;
        take_sample(cfg.dt * static_cast<double>(m + 1));
    }
    const double t_final = cfg.dt * static_cast<double>(nsteps);
    while (next_sample < sample_times.count()) record(t_final);
    return res;
}

} // namespace lans
