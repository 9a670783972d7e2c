#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "lans/fft.hpp"
#include "lans/norms.hpp"
#include "lans/operators.hpp"

namespace lans {

/// Single-shell divergence-free vortex.  2D: A(sin x cos y, -cos x sin y),
/// an exact Navier-Stokes solution decaying as e^{-2 nu t}.  3D:
/// A(cos x sin y sin z, -sin x cos y sin z, 0).
inline SpectralField gen_taylor_green(const Grid& grid, double amplitude) {
    const int N = grid.size;
    const std::size_t npts = grid.total_modes();
    const double h = 2.0 * std::numbers::pi / N;

    std::vector<std::vector<double>> samples(static_cast<std::size_t>(grid.dim),
                                             std::vector<double>(npts, 0.0));
    if (grid.dim == 2) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                const std::size_t idx = static_cast<std::size_t>(i) * N + j;
                const double x = h * i, y = h * j;
                samples[0][idx] = amplitude * std::sin(x) * std::cos(y);
                samples[1][idx] = -amplitude * std::cos(x) * std::sin(y);
            }
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int l = 0; l < N; ++l) {
                    const std::size_t idx =
                        (static_cast<std::size_t>(i) * N + j) * N + l;
                    const double x = h * i, y = h * j, z = h * l;
                    samples[0][idx] = amplitude * std::cos(x) * std::sin(y) * std::sin(z);
                    samples[1][idx] = -amplitude * std::sin(x) * std::cos(y) * std::sin(z);
                }
    }
    return to_spectral(grid, samples);
}

namespace detail {

/// Explicit Box-Muller on a 64-bit Mersenne Twister; kept self-contained so
/// generated fields are bit-identical across standard libraries.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

  private:
    double uniform() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace detail

/// Random divergence-free field with H^{s',2} membership exactly for
/// s' < s + 0.01: Gaussian white noise per component is shaped in Fourier
/// space by |k|^{-(s + n/2 + 0.01)}, Leray-projected, and scaled so
/// ||.||_{s,2} = amplitude.  Mean and Nyquist modes are zeroed; the result
/// is deterministic per seed.
inline SpectralField gen_random_sobolev(const Grid& grid, double s, std::uint64_t seed,
                                        double amplitude) {
    const std::size_t npts = grid.total_modes();
    const double n = static_cast<double>(grid.dim);
    const double decay = s + 0.5 * n + 0.01;

    SpectralField f(grid);
    for (int c = 0; c < grid.dim; ++c) {
        detail::GaussianStream gs(seed * 1000003ULL + static_cast<std::uint64_t>(c));
        std::vector<double> noise(npts);
        for (std::size_t i = 0; i < npts; ++i) noise[i] = gs.next();
        f.comp[static_cast<std::size_t>(c)] = to_spectral_component(grid, noise);
    }

    const int nyq = -grid.size / 2;
    for_each_mode(grid, [&](std::size_t idx, const std::array<int, 3>& k) {
        const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        double w;
        if (k2 == 0.0 || k[0] == nyq || k[1] == nyq || k[2] == nyq)
            w = 0.0;
        else
            w = std::pow(std::sqrt(k2), -decay);
        for (auto& comp : f.comp) comp[idx] *= w;
    });

    f = leray_project(f);
    if (amplitude > 0.0) {
        const double norm = plancherel_sum(f, s);
        if (norm > 0.0) f *= amplitude / norm;
    } else {
        f *= 0.0;
    }
    return f;
}

} // namespace lans
