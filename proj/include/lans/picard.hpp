#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include "lans/nonlinear.hpp"
#include "lans/semigroup.hpp"

namespace lans {

/// Parameters of the contraction space E_{T,M}: data norm H^{s1,p}, auxiliary
/// weighted norm t^a ||.||_{s2,c}, horizon T, and stopping control.
struct PicardConfig {
    double s1 = 0.75;
    double p = 2.0;
    double s2 = 1.0;
    double c = 2.0;
    double a = 0.125;
    double horizon = 0.1;
    int nodes = 48;
    TimeGrid::Spacing spacing = TimeGrid::Spacing::log_graded;
    double log_min_frac = 1e-6;
    int max_iterations = 30;
    double tolerance = 1e-8;

    void validate() const {
        if (!(tolerance > 0.0)) throw std::invalid_argument("PicardConfig: tolerance > 0");
        if (max_iterations < 1) throw std::invalid_argument("PicardConfig: max_iterations >= 1");
        if (!(a >= 0.0)) throw std::invalid_argument("PicardConfig: a >= 0");
        if (!(horizon > 0.0)) throw std::invalid_argument("PicardConfig: horizon > 0");
    }

    TimeGrid make_time_grid() const {
        return spacing == TimeGrid::Spacing::uniform
                   ? TimeGrid::uniform(horizon, nodes)
                   : TimeGrid::log_graded(horizon, nodes, log_min_frac);
    }
};

struct PicardDiagnostics {
    std::vector<double> e_norm;    // E-norm of each iterate
    std::vector<double> diff;      // d_m = ||u^m - u^{m-1}||_E, diff[0] unused (0)
    std::vector<double> ratio;     // d_{m+1}/d_m, 0 where undefined
    double final_residual = std::numeric_limits<double>::quiet_NaN();
    int iterations = 0;
    bool converged = false;
};

struct NonContractionError : std::runtime_error {
    PicardDiagnostics diagnostics;
    explicit NonContractionError(PicardDiagnostics d)
        : std::runtime_error("Picard iteration is not contracting (T or data too large)"),
          diagnostics(std::move(d)) {}
};

struct DivergenceError : std::runtime_error {
    PicardDiagnostics diagnostics;
    explicit DivergenceError(PicardDiagnostics d)
        : std::runtime_error("Picard iteration diverged"), diagnostics(std::move(d)) {}
};

/// E_{T,M}-norm: sup-in-t H^{s1,p} norm plus the weighted (a; s2, c) norm.
inline double e_norm(const Trajectory& u, const PicardConfig& cfg) {
    double sup = 0.0;
    for (const auto& s : u.states)
        sup = std::max(sup, sobolev_norm(s, SobolevIndex(cfg.s1, cfg.p)));
    return sup + weighted_time_norm(u, WeightedNormSpec(cfg.a, cfg.s2, cfg.c));
}

/// One application of the Duhamel map Phi(u) = Gamma(phi) - G P^a V^a(u,u).
inline Trajectory phi_map(const Trajectory& u, const SpectralField& phi, const AlphaParam& params) {
    u.validate();
    if (!u.states.empty() && u.states.front().grid != phi.grid)
        throw std::invalid_argument("phi_map: grid mismatch");

    Trajectory forcing(u.time_grid);
    for (const auto& s : u.states) {
        SpectralField nl = v_alpha(s, s, params.alpha);
        forcing.states.push_back(params.alpha > 0.0 ? stokes_project(nl, params.alpha)
                                                    : leray_project(nl));
    }
    Trajectory duh = duhamel(forcing, params.nu);
    Trajectory out = gamma(phi, u.time_grid, params.nu);
    for (std::size_t j = 0; j < out.count(); ++j) out.states[j] -= duh.states[j];
    return out;
}

/// E-norm residual of the integral equation, ||u - Phi(u)||_E.
inline double residual(const Trajectory& u, const SpectralField& phi, const AlphaParam& params,
                       const PicardConfig& cfg) {
    Trajectory pu = phi_map(u, phi, params);
    for (std::size_t j = 0; j < pu.count(); ++j) pu.states[j] -= u.states[j];
    return e_norm(pu, cfg);
}

struct PicardResult {
    Trajectory trajectory;
    PicardDiagnostics diagnostics;
};

/// Picard iteration u^0 = Gamma(phi), u^{m+1} = Phi(u^m), stopping when the
/// E-norm of successive differences falls below cfg.tolerance.  Throws
/// NonContractionError after three consecutive ratios >= 1 and
/// DivergenceError on E-norm overflow.
inline PicardResult picard_solve(const SpectralField& phi, const PicardConfig& cfg,
                                 const AlphaParam& params) {
    cfg.validate();
    if (divergence_residual(phi) > 1e-8)
        throw std::invalid_argument("picard_solve: initial data not divergence-free");

    const TimeGrid tg = cfg.make_time_grid();
    PicardDiagnostics diag;

    Trajectory u = gamma(phi, tg, params.nu);
    diag.e_norm.push_back(e_norm(u, cfg));
    diag.diff.push_back(0.0);
    diag.ratio.push_back(0.0);

    int bad_streak = 0;
    double prev_diff = 0.0;
    for (int m = 0; m < cfg.max_iterations; ++m) {
        Trajectory next = phi_map(u, phi, params);
        Trajectory delta = next;
        for (std::size_t j = 0; j < delta.count(); ++j) delta.states[j] -= u.states[j];
        const double d = e_norm(delta, cfg);
        const double en = e_norm(next, cfg);

        diag.e_norm.push_back(en);
        diag.diff.push_back(d);
        diag.ratio.push_back(prev_diff > 0.0 ? d / prev_diff : 0.0);
        diag.iterations = m + 1;
        u = std::move(next);

        if (!std::isfinite(en) || en > 1e12) throw DivergenceError(diag);
        if (prev_diff > 0.0) {
            if (d / prev_diff >= 1.0) {
                if (++bad_streak >= 3) throw NonContractionError(diag);
            } else {
                bad_streak = 0;
            }
        }
        prev_diff = d;
        if (d < cfg.tolerance) {
            diag.converged = true;
            break;
        }
    }
    diag.final_residual = residual(u, phi, params, cfg);
    return PicardResult{std::move(u), std::move(diag)};
}

} // namespace lans
