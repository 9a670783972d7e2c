#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "lans/grid.hpp"

namespace lans {

using cplx = std::complex<double>;

/// Pair (s, p) naming the Bessel-potential Sobolev space H^{s,p}.
struct SobolevIndex {
    double s = 0.0;
    double p = 2.0;

    SobolevIndex() = default;
    SobolevIndex(double s_, double p_) : s(s_), p(p_) {
        if (!(p > 1.0) || !std::isfinite(p))
            throw std::invalid_argument("SobolevIndex: need 1 < p < inf");
        if (!std::isfinite(s))
            throw std::invalid_argument("SobolevIndex: s must be finite");
    }
};

/// Averaging length alpha and viscosity nu.
struct AlphaParam {
    double alpha = 0.1;
    double nu = 1.0;

    AlphaParam() = default;
    AlphaParam(double alpha_, double nu_) : alpha(alpha_), nu(nu_) {
        if (!(alpha >= 0.0)) throw std::invalid_argument("AlphaParam: alpha >= 0 required");
        if (!(nu > 0.0)) throw std::invalid_argument("AlphaParam: nu > 0 required");
    }
};

/// Vector field on the periodic box stored as Fourier coefficients of
/// e^{i k.x}; one coefficient array per component, FFT mode order.
struct SpectralField {
    Grid grid;
    std::vector<std::vector<cplx>> comp;

    SpectralField() = default;
    explicit SpectralField(const Grid& g)
        : grid(g), comp(static_cast<std::size_t>(g.dim),
                        std::vector<cplx>(g.total_modes(), cplx{0.0, 0.0})) {}

    int ncomp() const { return grid.dim; }
    std::size_t nmodes() const { return grid.total_modes(); }

    SpectralField& operator+=(const SpectralField& o) {
        check_same_grid(o);
        for (int c = 0; c < ncomp(); ++c)
            for (std::size_t i = 0; i < nmodes(); ++i) comp[c][i] += o.comp[c][i];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        check_same_grid(o);
        for (int c = 0; c < ncomp(); ++c)
            for (std::size_t i = 0; i < nmodes(); ++i) comp[c][i] -= o.comp[c][i];
        return *this;
    }
    SpectralField& operator*=(double a) {
        for (auto& cc : comp)
            for (auto& v : cc) v *= a;
        return *this;
    }

    void check_same_grid(const SpectralField& o) const {
        if (grid != o.grid) throw std::invalid_argument("SpectralField: grid mismatch");
    }

    bool all_finite() const {
        for (const auto& cc : comp)
            for (const auto& v : cc)
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }
};

inline SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
inline SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
inline SpectralField operator*(double s, SpectralField a) { return a *= s; }

/// n x n tensor of Fourier coefficient arrays, row index first.
struct TensorField {
    Grid grid;
    std::vector<std::vector<cplx>> entry; // entry[j*dim + l]

    TensorField() = default;
    explicit TensorField(const Grid& g)
        : grid(g), entry(static_cast<std::size_t>(g.dim * g.dim),
                         std::vector<cplx>(g.total_modes(), cplx{0.0, 0.0})) {}

    std::vector<cplx>& at(int j, int l) { return entry[static_cast<std::size_t>(j * grid.dim + l)]; }
    const std::vector<cplx>& at(int j, int l) const {
        return entry[static_cast<std::size_t>(j * grid.dim + l)];
    }
};

/// max_k |k.u(k)| / max(|u(k)|,...) style relative divergence residual:
/// returns max over modes of |k.u(k)| / (|k| ||u||_inf-mode), normalized by
/// the largest coefficient magnitude so the result is scale free.
inline double divergence_residual(const SpectralField& f) {
    double max_coeff = 0.0;
    for (const auto& cc : f.comp)
        for (const auto& v : cc) max_coeff = std::max(max_coeff, std::abs(v));
    if (max_coeff == 0.0) return 0.0;
    double worst = 0.0;
    for_each_mode(f.grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        cplx dot{0.0, 0.0};
        double kn = 0.0;
        for (int c = 0; c < f.ncomp(); ++c) {
            dot += static_cast<double>(k[c]) * f.comp[c][idx];
            kn += static_cast<double>(k[c]) * static_cast<double>(k[c]);
        }
        if (kn > 0.0) worst = std::max(worst, std::abs(dot) / std::sqrt(kn));
    });
    return worst / max_coeff;
}

inline bool is_divergence_free(const SpectralField& f, double tol = 1e-10) {
    return divergence_residual(f) <= tol;
}

} // namespace lans
