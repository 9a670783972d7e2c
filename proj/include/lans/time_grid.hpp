#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lans/field.hpp"

namespace lans {

/// Sample times 0 = t_0 < t_1 < ... < t_M = T on [0, T].
struct TimeGrid {
    enum class Spacing { uniform, log_graded };

    double horizon = 0.0;
    std::vector<double> nodes;
    Spacing spacing = Spacing::uniform;

    static TimeGrid uniform(double T, int count) {
        if (!(T > 0.0) || count < 3) throw std::invalid_argument("TimeGrid::uniform: bad args");
        TimeGrid tg;
        tg.horizon = T;
        tg.spacing = Spacing::uniform;
        tg.nodes.resize(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            tg.nodes[static_cast<std::size_t>(i)] = T * static_cast<double>(i) / (count - 1);
        return tg;
    }

    /// t_0 = 0, then count-1 geometric nodes from T*min_frac to T.
    static TimeGrid log_graded(double T, int count, double min_frac = 1e-6) {
        if (!(T > 0.0) || count < 3 || !(min_frac > 0.0) || !(min_frac < 1.0))
            throw std::invalid_argument("TimeGrid::log_graded: bad args");
        TimeGrid tg;
        tg.horizon = T;
        tg.spacing = Spacing::log_graded;
        tg.nodes.push_back(0.0);
        const int m = count - 1;
        for (int i = 0; i < m; ++i) {
            const double f = static_cast<double>(i) / (m - 1);
            tg.nodes.push_back(T * std::pow(min_frac, 1.0 - f));
        }
        return tg;
    }

    std::size_t count() const { return nodes.size(); }

    void validate() const {
        if (nodes.size() < 3) throw std::invalid_argument("TimeGrid: need at least 3 nodes");
        if (nodes.front() != 0.0) throw std::invalid_argument("TimeGrid: t_0 must be 0");
        for (std::size_t i = 1; i < nodes.size(); ++i)
            if (!(nodes[i] > nodes[i - 1]))
                throw std::invalid_argument("TimeGrid: nodes must be strictly increasing");
    }
};

/// One SpectralField per time node.
struct Trajectory {
    TimeGrid time_grid;
    std::vector<SpectralField> states;

    Trajectory() = default;
    explicit Trajectory(const TimeGrid& tg) : time_grid(tg) { states.reserve(tg.count()); }

    std::size_t count() const { return states.size(); }

    void validate() const {
        if (states.size() != time_grid.count())
            throw std::invalid_argument("Trajectory: state count != node count");
        for (const auto& s : states)
            if (s.grid != states.front().grid)
                throw std::invalid_argument("Trajectory: mixed grids");
    }
};

/// sup_t t^a ||u(t)||_{k,q} specification.
struct WeightedNormSpec {
    double a = 0.0;
    double k = 0.0;
    double q = 2.0;

    WeightedNormSpec() = default;
    WeightedNormSpec(double a_, double k_, double q_) : a(a_), k(k_), q(q_) {
        if (!(a >= 0.0)) throw std::invalid_argument("WeightedNormSpec: a >= 0 required");
        if (!(q > 1.0)) throw std::invalid_argument("WeightedNormSpec: q > 1 required");
    }
};

/// (int_0^T ||u(t)||^a_{k,q} dt)^{1/a} specification.
struct LaNormSpec {
    double a = 1.0;
    double k = 0.0;
    double q = 2.0;

    LaNormSpec() = default;
    LaNormSpec(double a_, double k_, double q_) : a(a_), k(k_), q(q_) {
        if (!(a >= 1.0)) throw std::invalid_argument("LaNormSpec: a >= 1 required");
        if (!(q > 1.0)) throw std::invalid_argument("LaNormSpec: q > 1 required");
    }
};

} // namespace lans
