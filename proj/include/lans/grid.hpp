#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

namespace lans {

/// Periodic box [0, 2pi)^dim sampled on a uniform lattice of `size` points
/// per axis.  Fourier modes carry integer wavenumbers k with components in
/// [-size/2, size/2 - 1], stored in standard FFT order.
struct Grid {
    int dim = 3;
    int size = 32;

    Grid() = default;
    Grid(int dim_, int size_) : dim(dim_), size(size_) {
        if (dim != 2 && dim != 3)
            throw std::invalid_argument("Grid: dim must be 2 or 3");
        if (size < 8 || size % 2 != 0)
            throw std::invalid_argument("Grid: size must be even and >= 8");
    }

    std::size_t total_modes() const {
        std::size_t m = 1;
        for (int d = 0; d < dim; ++d) m *= static_cast<std::size_t>(size);
        return m;
    }

    /// Integer wavenumber of axis index i in [0, size).
    int wavenumber(int i) const { return i < size / 2 ? i : i - size; }

    bool operator==(const Grid& o) const { return dim == o.dim && size == o.size; }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

/// Calls f(flat_index, k) for every lattice mode; k[2] == 0 in 2D.
template <class F>
void for_each_mode(const Grid& g, F&& f) {
    const int N = g.size;
    std::array<int, 3> k{0, 0, 0};
    if (g.dim == 2) {
        std::size_t idx = 0;
        for (int ix = 0; ix < N; ++ix) {
            k[0] = g.wavenumber(ix);
            for (int iy = 0; iy < N; ++iy, ++idx) {
                k[1] = g.wavenumber(iy);
                f(idx, k);
            }
        }
    } else {
        std::size_t idx = 0;
        for (int ix = 0; ix < N; ++ix) {
            k[0] = g.wavenumber(ix);
            for (int iy = 0; iy < N; ++iy) {
                k[1] = g.wavenumber(iy);
                for (int iz = 0; iz < N; ++iz, ++idx) {
                    k[2] = g.wavenumber(iz);
                    f(idx, k);
                }
            }
        }
    }
}

} // namespace lans
