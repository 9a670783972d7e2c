#pragma once

#include <cmath>

#include "lans/fft.hpp"
#include "lans/operators.hpp"

namespace lans {

/// Plancherel sum (sum_k (1+|k|^2)^s |u(k)|^2)^{1/2} over all components.
/// Equals the H^{s,2} norm under the normalized torus measure dx/(2pi)^n.
inline double plancherel_sum(const SpectralField& f, double s) {
    double acc = 0.0;
    for_each_mode(f.grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        const double w = std::pow(1.0 + k2, s);
        for (int c = 0; c < f.ncomp(); ++c) acc += w * std::norm(f.comp[c][idx]);
    });
    return std::sqrt(acc);
}

/// H^{s,p} norm by the Bessel-potential route: apply (1-Lap)^{s/2} in
/// Fourier space, then take the discrete L^p norm of the pointwise
/// Euclidean magnitude in physical space (normalized measure).
inline double sobolev_norm_quadrature(const SpectralField& f, const SobolevIndex& idx) {
    SpectralField g = bessel_multiplier(f, idx.s);
    auto phys = to_physical(g);
    const std::size_t n = phys[0].size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double m2 = 0.0;
        for (const auto& c : phys) m2 += c[i] * c[i];
        acc += std::pow(m2, 0.5 * idx.p);
    }
    return std::pow(acc / static_cast<double>(n), 1.0 / idx.p);
}

/// H^{s,p} norm; p == 2 dispatches to the Plancherel sum (equal to the
/// quadrature route up to roundoff, see unit tests).
inline double sobolev_norm(const SpectralField& f, const SobolevIndex& idx) {
    if (idx.p == 2.0) return plancherel_sum(f, idx.s);
    return sobolev_norm_quadrature(f, idx);
}

/// L^2 norms of u, grad u, Lap u as squared spectral sums.
struct EnergyParts {
    double l2_sq = 0.0;    // ||u||^2
    double grad_sq = 0.0;  // ||grad u||^2
    double lap_sq = 0.0;   // ||Lap u||^2
};

inline EnergyParts energy_parts(const SpectralField& f) {
    EnergyParts e;
    for_each_mode(f.grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        double m2 = 0.0;
        for (int c = 0; c < f.ncomp(); ++c) m2 += std::norm(f.comp[c][idx]);
        e.l2_sq += m2;
        e.grad_sq += k2 * m2;
        e.lap_sq += k2 * k2 * m2;
    });
    return e;
}

/// LANS alpha-energy E_alpha = ||u||^2_{L^2} + alpha^2 ||grad u||^2_{L^2}.
inline double energy_alpha(const SpectralField& f, double alpha) {
    EnergyParts e = energy_parts(f);
    return e.l2_sq + alpha * alpha * e.grad_sq;
}

} // namespace lans
