#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "lans/field.hpp"

namespace lans {

/// Binary snapshot: magic "LANS", u32 version, u32 n, u32 N, f64 t, f64
/// alpha, f64 nu, then n coefficient arrays as (re, im) f64 pairs in
/// row-major wavenumber order.  Little-endian throughout.
struct Checkpoint {
    static constexpr std::uint32_t format_version = 1;

    double time = 0.0;
    double alpha = 0.0;
    double nu = 0.0;
    SpectralField field;
};

namespace detail {

template <typename T>
void write_raw(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void read_raw(std::istream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw std::runtime_error("checkpoint: truncated file");
}

} // namespace detail

inline void save_checkpoint(const std::string& path, const Checkpoint& cp) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("checkpoint: cannot open " + path + " for writing");
    os.write("LANS", 4);
    detail::write_raw(os, Checkpoint::format_version);
    detail::write_raw(os, static_cast<std::uint32_t>(cp.field.grid.dim));
    detail::write_raw(os, static_cast<std::uint32_t>(cp.field.grid.size));
    detail::write_raw(os, cp.time);
    detail::write_raw(os, cp.alpha);
    detail::write_raw(os, cp.nu);
    for (const auto& comp : cp.field.comp)
        for (const auto& v : comp) {
            detail::write_raw(os, v.real());
            detail::write_raw(os, v.imag());
        }
    if (!os) throw std::runtime_error("checkpoint: write failed for " + path);
}

inline Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("checkpoint: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "LANS", 4) != 0)
        throw std::runtime_error("checkpoint: bad magic in " + path);
    std::uint32_t version, n, N;
    detail::read_raw(is, version);
    if (version != Checkpoint::format_version)
        throw std::runtime_error("checkpoint: unsupported format version");
    detail::read_raw(is, n);
    detail::read_raw(is, N);

    Checkpoint cp;
    detail::read_raw(is, cp.time);
    detail::read_raw(is, cp.alpha);
    detail::read_raw(is, cp.nu);
    cp.field = SpectralField(Grid(static_cast<int>(n), static_cast<int>(N)));
    for (auto& comp : cp.field.comp)
        for (auto& v : comp) {
            double re, im;
            detail::read_raw(is, re);
            detail::read_raw(is, im);
            v = cplx{re, im};
        }
    return cp;
}

} // namespace lans
