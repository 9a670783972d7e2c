#pragma once

#include <cmath>

#include "lans/norms.hpp"
#include "lans/operators.hpp"
#include "lans/time_grid.hpp"

namespace lans {

/// Heat propagator e^{nu t Lap}: multiplier e^{-nu |k|^2 t}.
inline SpectralField heat_propagate(const SpectralField& f, double t, double nu) {
    if (t < 0.0) throw std::invalid_argument("heat_propagate: t >= 0 required");
    if (t == 0.0) return f;
    return apply_multiplier(f, [t, nu](double k2) { return std::exp(-nu * k2 * t); });
}

/// Gamma(phi): heat evolution of initial data sampled on a time grid.
inline Trajectory gamma(const SpectralField& phi, const TimeGrid& tg, double nu) {
    tg.validate();
    Trajectory out(tg);
    for (double t : tg.nodes) out.states.push_back(heat_propagate(phi, t, nu));
    return out;
}

namespace detail {

/// phi1(x) = (1 - e^{-x}) / x and phi2(x) = (x - 1 + e^{-x}) / x^2 with
/// series fallback near x = 0 (x = nu |k|^2 h >= 0).
inline void duhamel_weights(double x, double& w_left, double& w_right) {
    double phi1, phi2;
    if (x < 1e-3) {
        phi1 = 1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0 + x * x * x * x / 120.0;
        phi2 = 0.5 - x / 6.0 + x * x / 24.0 - x * x * x / 120.0 + x * x * x * x / 720.0;
    } else {
        const double e = std::exp(-x);
        phi1 = (1.0 - e) / x;
        phi2 = (x - 1.0 + e) / (x * x);
    }
    w_left = phi1 - phi2;
    w_right = phi2;
}

} // namespace detail

/// Duhamel operator G.g(t) = int_0^t e^{nu (t-s) Lap} g(s) ds, evaluated at
/// every node of g's time grid.  Per Fourier mode the integral of the
/// piecewise-linear interpolant of g_hat(k, s) against the kernel
/// e^{-nu |k|^2 (t-s)} is computed in closed form, so only the forcing
/// interpolation is approximate.
inline Trajectory duhamel(const Trajectory& g, double nu) {
    g.validate();
    if (g.count() == 0) throw std::invalid_argument("duhamel: empty trajectory");
    const Grid& grid = g.states.front().grid;
    const std::size_t M = g.count();

    Trajectory out(g.time_grid);
    for (std::size_t m = 0; m < M; ++m) out.states.emplace_back(grid);

    const int nc = grid.dim;
    for_each_mode(grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        const double lam =
            nu * static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        for (int c = 0; c < nc; ++c) {
            cplx acc{0.0, 0.0};
            for (std::size_t m = 1; m < M; ++m) {
                const double h = g.time_grid.nodes[m] - g.time_grid.nodes[m - 1];
                const double x = lam * h;
                double wl, wr;
                detail::duhamel_weights(x, wl, wr);
                acc = std::exp(-x) * acc +
                      h * (wl * g.states[m - 1].comp[c][idx] + wr * g.states[m].comp[c][idx]);
                out.states[m].comp[c][idx] = acc;
            }
        }
    });
    return out;
}

/// sup over nodes t_j > 0 of t_j^a ||u(t_j)||_{k,q}.
inline double weighted_time_norm(const Trajectory& u, const WeightedNormSpec& spec) {
    u.validate();
    double best = 0.0;
    for (std::size_t j = 0; j < u.count(); ++j) {
        const double t = u.time_grid.nodes[j];
        if (t <= 0.0) continue;
        const double v = std::pow(t, spec.a) * sobolev_norm(u.states[j], SobolevIndex(spec.k, spec.q));
        best = std::max(best, v);
    }
    return best;
}

/// (int_0^T ||u(t)||^a_{k,q} dt)^{1/a} by the trapezoid rule on u's grid.
inline double la_time_norm(const Trajectory& u, const LaNormSpec& spec) {
    u.validate();
    std::vector<double> vals(u.count());
    for (std::size_t j = 0; j < u.count(); ++j)
        vals[j] = std::pow(sobolev_norm(u.states[j], SobolevIndex(spec.k, spec.q)), spec.a);
    double acc = 0.0;
    for (std::size_t j = 1; j < u.count(); ++j)
        acc += 0.5 * (vals[j] + vals[j - 1]) * (u.time_grid.nodes[j] - u.time_grid.nodes[j - 1]);
    return std::pow(acc, 1.0 / spec.a);
}

} // namespace lans
