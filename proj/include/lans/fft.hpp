#pragma once

#include <fftw3.h>

#include <cstring>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "lans/field.hpp"

namespace lans {
namespace detail {

/// Cached in-place c2c FFTW plans per (dim, size, sign).  Single-threaded:
/// each transform copies through one scratch buffer.
class FftCache {
  public:
    static FftCache& instance() {
        static FftCache c;
        return c;
    }

    // sign: FFTW_FORWARD (-1) or FFTW_BACKWARD (+1); unnormalized.
    void execute(const Grid& g, cplx* data, int sign) {
        auto key = std::make_tuple(g.dim, g.size, sign);
        auto it = plans_.find(key);
        if (it == plans_.end()) {
            Slot s;
            s.n = g.total_modes();
            s.buf = fftw_alloc_complex(s.n);
            int dims[3] = {g.size, g.size, g.size};
            s.plan = fftw_plan_dft(g.dim, dims, s.buf, s.buf, sign, FFTW_ESTIMATE);
            if (!s.plan) throw std::runtime_error("fftw_plan_dft failed");
            it = plans_.emplace(key, s).first;
        }
        Slot& s = it->second;
        std::memcpy(s.buf, data, s.n * sizeof(fftw_complex));
        fftw_execute(s.plan);
        std::memcpy(data, s.buf, s.n * sizeof(fftw_complex));
    }

  private:
    struct Slot {
        fftw_plan plan = nullptr;
        fftw_complex* buf = nullptr;
        std::size_t n = 0;
    };
    std::map<std::tuple<int, int, int>, Slot> plans_;
    FftCache() = default;
    ~FftCache() {
        for (auto& [k, s] : plans_) {
            fftw_destroy_plan(s.plan);
            fftw_free(s.buf);
        }
    }
};

} // namespace detail

/// Physical samples of one coefficient array: u(x_j) = sum_k c_k e^{i k.x_j}.
/// Returns the real part (fields of interest are Hermitian-symmetric).
inline std::vector<double> to_physical_component(const Grid& g, const std::vector<cplx>& coeff) {
    if (coeff.size() != g.total_modes())
        throw std::invalid_argument("to_physical_component: size mismatch");
    std::vector<cplx> work(coeff);
    detail::FftCache::instance().execute(g, work.data(), FFTW_BACKWARD);
    std::vector<double> out(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) out[i] = work[i].real();
    return out;
}

/// Inverse of to_physical_component (forward DFT / N^dim).
inline std::vector<cplx> to_spectral_component(const Grid& g, const std::vector<double>& samples) {
    if (samples.size() != g.total_modes())
        throw std::invalid_argument("to_spectral_component: size mismatch");
    std::vector<cplx> work(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) work[i] = cplx{samples[i], 0.0};
    detail::FftCache::instance().execute(g, work.data(), FFTW_FORWARD);
    const double inv = 1.0 / static_cast<double>(g.total_modes());
    for (auto& v : work) v *= inv;
    return work;
}

inline std::vector<std::vector<double>> to_physical(const SpectralField& f) {
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(f.ncomp()));
    for (int c = 0; c < f.ncomp(); ++c) out.push_back(to_physical_component(f.grid, f.comp[c]));
    return out;
}

inline SpectralField to_spectral(const Grid& g, const std::vector<std::vector<double>>& samples) {
    if (static_cast<int>(samples.size()) != g.dim)
        throw std::invalid_argument("to_spectral: component count mismatch");
    SpectralField f(g);
    for (int c = 0; c < g.dim; ++c) f.comp[c] = to_spectral_component(g, samples[c]);
    return f;
}

} // namespace lans
