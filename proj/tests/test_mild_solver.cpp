#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lans/initial_data.hpp"
#include "lans/picard.hpp"

using namespace lans;

namespace {

PicardConfig small_config() {
    PicardConfig cfg;
    cfg.horizon = 0.05;
    cfg.nodes = 17;
    cfg.log_min_frac = 1e-4;
    cfg.tolerance = 1e-10;
    cfg.max_iterations = 20;
    return cfg;
}

double l2(const SpectralField& f) { return sobolev_norm(f, SobolevIndex(0.0, 2.0)); }

} // namespace

TEST_CASE("zero data is a fixed point") {
    const Grid g(3, 16);
    const AlphaParam params(0.5, 1.0);
    PicardResult res = picard_solve(SpectralField(g), small_config(), params);
    CHECK(res.diagnostics.converged);
    CHECK(res.diagnostics.iterations == 1);
    for (const auto& s : res.trajectory.states) CHECK(l2(s) == 0.0);
    CHECK(res.diagnostics.final_residual == 0.0);
}

TEST_CASE("duhamel map assembles heat flow minus the integrated nonlinearity") {
    const Grid g(3, 16);
    const AlphaParam params(0.5, 1.0);
    SpectralField phi = gen_taylor_green(g, 0.2);
    const TimeGrid tg = TimeGrid::uniform(0.05, 9);

    Trajectory u = gamma(phi, tg, params.nu);
    Trajectory mapped = phi_map(u, phi, params);

    // term-by-term reference assembly
    Trajectory forcing(tg);
    for (const auto& s : u.states)
        forcing.states.push_back(stokes_project(v_alpha(s, s, params.alpha), params.alpha));
    Trajectory duh = duhamel(forcing, params.nu);
    for (std::size_t j = 0; j < tg.count(); ++j) {
        SpectralField expect = heat_propagate(phi, tg.nodes[j], params.nu) - duh.states[j];
        CHECK(l2(mapped.states[j] - expect) <= 1e-13);
    }
}

TEST_CASE("picard solve on small vortex data") {
    const Grid g(3, 16);
    const AlphaParam params(0.5, 1.0);
    SpectralField phi = gen_taylor_green(g, 0.1);
    const PicardConfig cfg = small_config();
    PicardResult res = picard_solve(phi, cfg, params);
    REQUIRE(res.diagnostics.converged);

    SUBCASE("residual at the fixed point is controlled by the tolerance") {
        CHECK(res.diagnostics.final_residual <= 10.0 * cfg.tolerance);
        CHECK(residual(res.trajectory, phi, params, cfg) ==
              doctest::Approx(res.diagnostics.final_residual).epsilon(1e-12));
    }

    SUBCASE("residual grows linearly in a small perturbation") {
        SpectralField w = gen_random_sobolev(g, 2.0, 77, 1.0);
        auto perturbed_residual = [&](double eps) {
            Trajectory pert = res.trajectory;
            for (auto& s : pert.states) s += eps * w;
            return residual(pert, phi, params, cfg);
        };
        const double r1 = perturbed_residual(1e-6);
        const double r2 = perturbed_residual(2e-6);
        CHECK(r1 > 100.0 * cfg.tolerance); // perturbation dominates
        CHECK(r2 / r1 == doctest::Approx(2.0).epsilon(0.05));
    }

    SUBCASE("iteration from a different starting trajectory finds the same fixed point") {
        // start from the zero trajectory instead of the heat flow
        Trajectory u(cfg.make_time_grid());
        for (std::size_t j = 0; j < u.time_grid.count(); ++j) u.states.emplace_back(g);
        for (int m = 0; m < cfg.max_iterations; ++m) u = phi_map(u, phi, params);
        double worst = 0.0;
        for (std::size_t j = 0; j < u.count(); ++j)
            worst = std::max(worst, l2(u.states[j] - res.trajectory.states[j]));
        CHECK(worst <= 10.0 * cfg.tolerance);
    }

    SUBCASE("every node of the fixed point is divergence-free") {
        for (const auto& s : res.trajectory.states) CHECK(divergence_residual(s) <= 1e-10);
    }

    SUBCASE("successive differences shrink below tolerance") {
        const auto& d = res.diagnostics.diff;
        REQUIRE(d.size() >= 2);
        CHECK(d.back() < cfg.tolerance);
    }
}

TEST_CASE("non-solenoidal data is rejected") {
    const Grid g(3, 16);
    SpectralField f = gen_random_sobolev(g, 1.0, 3, 0.1);
    for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& k) {
        for (int c = 0; c < 3; ++c)
            f.comp[c][idx] += 0.3 * cplx{0.0, static_cast<double>(k[c])} * f.comp[0][idx];
    });
    CHECK_THROWS_AS((void)picard_solve(f, small_config(), AlphaParam(0.5, 1.0)),
                    std::invalid_argument);
}
