#pragma once

#include "lans/fft.hpp"
#include "lans/norms.hpp"
#include "lans/operators.hpp"

namespace lans {

namespace detail {

/// Physical-space entries of grad(dealias(u)); g[j][l] = d_l u_j.
inline std::vector<std::vector<std::vector<double>>> grad_physical(const SpectralField& u) {
    TensorField g = grad(dealias(u));
    const int n = u.ncomp();
    std::vector<std::vector<std::vector<double>>> out(
        static_cast<std::size_t>(n), std::vector<std::vector<double>>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) out[j][l] = to_physical_component(u.grid, g.at(j, l));
    return out;
}

} // namespace detail

/// Reynolds stress tau^a(u,v) = a^2 (1 - a^2 Lap)^{-1} M with
/// M = (Def(u).Rot(v) + Def(v).Rot(u)) / 2, a symmetrized polarization whose
/// diagonal tau^a(u,u) = a^2 (1 - a^2 Lap)^{-1} [Def(u).Rot(u)].
/// Products are formed in physical space with 2/3-rule dealiasing.
inline TensorField reynolds_stress(const SpectralField& u, const SpectralField& v, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("reynolds_stress: alpha > 0 required");
    u.check_same_grid(v);
    const int n = u.ncomp();
    const Grid& g = u.grid;
    const std::size_t npts = g.total_modes();

    auto gu = detail::grad_physical(u);
    const bool same = (&u == &v);
    auto gv = same ? gu : detail::grad_physical(v);

    auto def_of = [npts](const std::vector<std::vector<std::vector<double>>>& gr, int j, int l) {
        std::vector<double> d(npts);
        for (std::size_t i = 0; i < npts; ++i) d[i] = 0.5 * (gr[j][l][i] + gr[l][j][i]);
        return d;
    };
    auto rot_of = [npts](const std::vector<std::vector<std::vector<double>>>& gr, int j, int l) {
        std::vector<double> r(npts);
        for (std::size_t i = 0; i < npts; ++i) r[i] = 0.5 * (gr[j][l][i] - gr[l][j][i]);
        return r;
    };

    TensorField out(g);
    const double a2 = alpha * alpha;
    std::vector<double> m(npts);
    for (int j = 0; j < n; ++j) {
        for (int kk = 0; kk < n; ++kk) {
            std::fill(m.begin(), m.end(), 0.0);
            for (int l = 0; l < n; ++l) {
                auto du = def_of(gu, j, l);
                auto rv = rot_of(gv, l, kk);
                if (same) {
                    for (std::size_t i = 0; i < npts; ++i) m[i] += du[i] * rv[i];
                } else {
                    auto dv = def_of(gv, j, l);
                    auto ru = rot_of(gu, l, kk);
                    for (std::size_t i = 0; i < npts; ++i)
                        m[i] += 0.5 * (du[i] * rv[i] + dv[i] * ru[i]);
                }
            }
            auto spec = to_spectral_component(g, m);
            // dealias + Helmholtz inverse with the a^2 prefactor
            for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& k) {
                if (3 * std::abs(k[0]) > g.size || 3 * std::abs(k[1]) > g.size ||
                    3 * std::abs(k[2]) > g.size) {
                    spec[idx] = cplx{0.0, 0.0};
                    return;
                }
                const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
                spec[idx] *= a2 / (1.0 + a2 * k2);
            });
            out.at(j, kk) = std::move(spec);
        }
    }
    return out;
}

/// V^a(u,v) = div(u (x) v) + div tau^a(u,v); bilinear in (u, v).
/// alpha == 0 drops the Reynolds-stress term (Navier-Stokes limit).
inline SpectralField v_alpha(const SpectralField& u, const SpectralField& v, double alpha) {
    u.check_same_grid(v);
    const Grid& g = u.grid;
    const int n = u.ncomp();
    const std::size_t npts = g.total_modes();

    const bool same = (&u == &v);
    auto up = to_physical(dealias(u));
    auto vp = same ? up : to_physical(dealias(v));

    TensorField t(g);
    std::vector<double> prod(npts);
    for (int j = 0; j < n; ++j) {
        for (int kk = 0; kk < n; ++kk) {
            if (same && kk < j) {
                t.at(j, kk) = t.at(kk, j);
                continue;
            }
            for (std::size_t i = 0; i < npts; ++i) prod[i] = up[j][i] * vp[kk][i];
            t.at(j, kk) = to_spectral_component(g, prod);
        }
    }
    SpectralField result = div_tensor(t);
    result = dealias(result);

    if (alpha > 0.0) {
        TensorField tau = reynolds_stress(u, v, alpha);
        result += div_tensor(tau);
    }
    return result;
}

/// Right-hand side of the projected LANS equation:
/// nu Lap u - P^alpha(V^alpha(u,u)).
inline SpectralField lans_rhs(const SpectralField& u, const AlphaParam& params,
                              double div_tol = 1e-8) {
    if (divergence_residual(u) > div_tol)
        throw std::invalid_argument("lans_rhs: input is not divergence-free");
    SpectralField nl = v_alpha(u, u, params.alpha);
    SpectralField proj = params.alpha > 0.0 ? stokes_project(nl, params.alpha) : leray_project(nl);
    SpectralField out = apply_multiplier(u, [nu = params.nu](double k2) { return -nu * k2; });
    out -= proj;
    return out;
}

} // namespace lans
