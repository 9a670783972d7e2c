#pragma once

#include <cmath>

#include "lans/field.hpp"

namespace lans {

/// Applies a scalar multiplier m(|k|^2) to every component.
template <class M>
SpectralField apply_multiplier(const SpectralField& f, M&& m) {
    SpectralField out(f.grid);
    for_each_mode(f.grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        const double w = m(k2);
        for (int c = 0; c < f.ncomp(); ++c) out.comp[c][idx] = w * f.comp[c][idx];
    });
    return out;
}

/// (1 - Lap)^{s/2}: multiplier (1 + |k|^2)^{s/2}.
inline SpectralField bessel_multiplier(const SpectralField& f, double s) {
    if (s == 0.0) return f;
    return apply_multiplier(f, [s](double k2) { return std::pow(1.0 + k2, 0.5 * s); });
}

/// (1 - alpha^2 Lap)^{-1}: multiplier 1 / (1 + alpha^2 |k|^2).
inline SpectralField helmholtz_inverse(const SpectralField& f, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("helmholtz_inverse: alpha >= 0 required");
    if (alpha == 0.0) return f;
    const double a2 = alpha * alpha;
    return apply_multiplier(f, [a2](double k2) { return 1.0 / (1.0 + a2 * k2); });
}

inline SpectralField laplacian(const SpectralField& f) {
    return apply_multiplier(f, [](double k2) { return -k2; });
}

/// 2/3-rule mask: zeroes every mode with any |k_i| > size/3.
inline SpectralField dealias(const SpectralField& f) {
    SpectralField out(f.grid);
    const int N = f.grid.size;
    for_each_mode(f.grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        if (3 * std::abs(k[0]) > N || 3 * std::abs(k[1]) > N || 3 * std::abs(k[2]) > N) return;
        for (int c = 0; c < f.ncomp(); ++c) out.comp[c][idx] = f.comp[c][idx];
    });
    return out;
}

/// grad(u)_{jl} = d_l u_j, exact Fourier differentiation.
inline TensorField grad(const SpectralField& f) {
    TensorField t(f.grid);
    const int n = f.ncomp();
    for_each_mode(f.grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        for (int j = 0; j < n; ++j) {
            const cplx uj = f.comp[j][idx];
            for (int l = 0; l < n; ++l)
                t.at(j, l)[idx] = cplx{0.0, static_cast<double>(k[l])} * uj;
        }
    });
    return t;
}

/// (div T)_j = sum_l d_l T_{jl}.
inline SpectralField div_tensor(const TensorField& t) {
    SpectralField out(t.grid);
    const int n = t.grid.dim;
    for_each_mode(t.grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        for (int j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (int l = 0; l < n; ++l)
                acc += cplx{0.0, static_cast<double>(k[l])} * t.at(j, l)[idx];
            out.comp[j][idx] = acc;
        }
    });
    return out;
}

inline TensorField def_tensor(const SpectralField& f) {
    TensorField g = grad(f);
    TensorField d(f.grid);
    const int n = f.ncomp();
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
            for (std::size_t i = 0; i < f.nmodes(); ++i)
                d.at(j, l)[i] = 0.5 * (g.at(j, l)[i] + g.at(l, j)[i]);
    return d;
}

inline TensorField rot_tensor(const SpectralField& f) {
    TensorField g = grad(f);
    TensorField r(f.grid);
    const int n = f.ncomp();
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
            for (std::size_t i = 0; i < f.nmodes(); ++i)
                r.at(j, l)[i] = 0.5 * (g.at(j, l)[i] - g.at(l, j)[i]);
    return r;
}

/// Helmholtz decomposition: u(k) - k (k.u(k)) / |k|^2, mean mode unchanged.
inline SpectralField leray_project(const SpectralField& f) {
    SpectralField out = f;
    for_each_mode(f.grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        if (k2 == 0.0) return;
        cplx dot{0.0, 0.0};
        for (int c = 0; c < f.ncomp(); ++c) dot += static_cast<double>(k[c]) * f.comp[c][idx];
        dot /= k2;
        for (int c = 0; c < f.ncomp(); ++c) out.comp[c][idx] -= static_cast<double>(k[c]) * dot;
    });
    return out;
}

/// Stokes projector adapted to the (1 - alpha^2 Lap) metric.  Solves the
/// Stokes problem (1 - a^2 Lap) v + grad f = (1 - a^2 Lap) w mode-wise for
/// the pressure f and subtracts (1 - a^2 Lap)^{-1} grad f from w; on the
/// torus the result coincides with the Leray projection.
inline SpectralField stokes_project(const SpectralField& w, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("stokes_project: alpha > 0 required");
    const double a2 = alpha * alpha;
    SpectralField out = w;
    for_each_mode(w.grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        if (k2 == 0.0) return;
        cplx kdotw{0.0, 0.0};
        for (int c = 0; c < w.ncomp(); ++c) kdotw += static_cast<double>(k[c]) * w.comp[c][idx];
        const double helm = 1.0 + a2 * k2;
        // dotting the Stokes problem with k: i |k|^2 f_hat = helm * (k . w_hat)
        const cplx f_hat = cplx{0.0, -1.0} * helm * kdotw / k2;
        // subtract (1 - a^2 Lap)^{-1} (i k f_hat)
        for (int c = 0; c < w.ncomp(); ++c)
            out.comp[c][idx] -= cplx{0.0, static_cast<double>(k[c])} * f_hat / helm;
    });
    return out;
}

} // namespace lans
