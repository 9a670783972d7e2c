#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lans/norms.hpp"
#include "lans/picard.hpp"
#include "lans/time_grid.hpp"

namespace lans {

/// Shortest round-trip decimal form; keeps CSV output byte-reproducible.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[64];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        std::sscanf(shorter, "%lf", &back);
        if (back == v) return shorter;
    }
    return buf;
}

inline void write_csv(const std::string& path, const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("csv: cannot open " + path + " for writing");
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_double(row[i]);
        os << "\n";
    }
    if (!os) throw std::runtime_error("csv: write failed for " + path);
}

/// Time series of H^{s,2} norms for s = 0..3 plus any extra (s, p) norms.
inline void write_trajectory_csv(const std::string& path, const Trajectory& u,
                                 const std::vector<SobolevIndex>& extra = {}) {
    u.validate();
    std::vector<std::string> header{"t", "norm_0_2", "norm_1_2", "norm_2_2", "norm_3_2"};
    for (const auto& idx : extra)
        header.push_back("norm_" + format_double(idx.s) + "_" + format_double(idx.p));
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < u.count(); ++j) {
        std::vector<double> row{u.time_grid.nodes[j]};
        for (int s = 0; s <= 3; ++s)
            row.push_back(sobolev_norm(u.states[j], SobolevIndex(static_cast<double>(s), 2.0)));
        for (const auto& idx : extra) row.push_back(sobolev_norm(u.states[j], idx));
        rows.push_back(std::move(row));
    }
    write_csv(path, header, rows);
}

/// Per-iteration Picard record; residual is reported once, on the last row.
inline void write_diagnostics_csv(const std::string& path, const PicardDiagnostics& d) {
    std::vector<std::vector<double>> rows;
    for (std::size_t m = 0; m < d.e_norm.size(); ++m) {
        const bool last = (m + 1 == d.e_norm.size());
        rows.push_back({static_cast<double>(m), d.e_norm[m], d.diff[m], d.ratio[m],
                        last ? d.final_residual : 0.0});
    }
    write_csv(path, {"iteration", "e_norm", "diff_norm", "ratio", "residual"}, rows);
}

} // namespace lans
