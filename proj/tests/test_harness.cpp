#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lans/experiments.hpp"

using namespace lans;

TEST_CASE("log-log fit recovers an exact power law") {
    std::vector<double> x, y;
    for (double t : {0.01, 0.04, 0.2, 1.0, 3.0, 10.0}) {
        x.push_back(t);
        y.push_back(3.0 * std::pow(t, 1.7));
    }
    FitResult f = fit_loglog(x, y);
    CHECK(f.slope == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(f.residual <= 1e-12);
    CHECK_THROWS_AS((void)fit_loglog(x, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("log-spaced grid hits both endpoints geometrically") {
    auto t = log_spaced(1e-4, 1e-1, 4);
    REQUIRE(t.size() == 4);
    CHECK(t[0] == doctest::Approx(1e-4).epsilon(1e-14));
    CHECK(t[3] == doctest::Approx(1e-1).epsilon(1e-14));
    CHECK(t[1] / t[0] == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(t[2] / t[1] == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("bilinear estimate hypotheses") {
    CHECK(bilinear_hypothesis(2.0, 2.0, 4.0 / 3.0, 3.0).ok);
    // q = p = 2 forces n(2q-p)/(pq) = n/2 > r - 1 for r <= 2 in 3D
    CHECK_FALSE(bilinear_hypothesis(1.0, 2.0, 2.0, 3.0).ok);
    CHECK(bilinear_hypothesis(1.0, 2.0, 2.0, 3.0).reason ==
          "0 <= n(2q - p)/(pq) <= r - 1 violated");
    // 2/p - 1/q >= 1
    CHECK_FALSE(bilinear_hypothesis(3.0, 1.2, 10.0, 3.0).ok);
    CHECK(bilinear_hypothesis(3.0, 1.2, 10.0, 3.0).reason == "2/p - 1/q < 1 violated");
}

TEST_CASE("energy monotonicity check") {
    const Grid g(3, 16);
    SpectralField phi = gen_taylor_green(g, 0.5);
    const double alpha = 0.5, nu = 1.0;

    SUBCASE("heat flow passes: exact dissipation at alpha-weighted rate") {
        // for single-shell data E' = -2 nu ||grad u||^2 and the alpha^2
        // terms match mode by mode
        Trajectory traj = gamma(phi, TimeGrid::uniform(0.2, 41), nu);
        CaseReport rep = energy_monotonicity_check(traj, alpha, nu, 5e-3, "unit-heat");
        CHECK(rep.pass);
        CHECK(rep.measured.at("worst_relative_increase") <= 0.0);
    }

    SUBCASE("a rigged growing trajectory fails") {
        const TimeGrid tg = TimeGrid::uniform(0.1, 6);
        Trajectory traj(tg);
        for (std::size_t j = 0; j < tg.count(); ++j) {
            SpectralField s = phi;
            s *= 1.0 + static_cast<double>(j);
            traj.states.push_back(std::move(s));
        }
        CaseReport rep = energy_monotonicity_check(traj, alpha, nu, 1e-6, "unit-rigged");
        CHECK_FALSE(rep.pass);
        CHECK(rep.measured.at("worst_relative_increase") > 0.0);
    }
}

TEST_CASE("h2 a priori bound check") {
    const Grid g(3, 16);

    SUBCASE("heat-flow ensemble is finite and monotone in the data size") {
        std::vector<Trajectory> runs;
        for (double amp : {0.1, 0.3, 0.7})
            runs.push_back(gamma(gen_taylor_green(g, amp), TimeGrid::uniform(0.1, 7), 1.0));
        CaseReport rep = h2_bound_check(runs, "unit");
        CHECK(rep.pass);
    }

    SUBCASE("an inverted ensemble is flagged as non-monotone") {
        // larger initial H^1 data paired with a smaller trajectory
        std::vector<Trajectory> runs;
        const TimeGrid tg = TimeGrid::uniform(0.1, 3);
        for (double amp : {0.1, 0.5}) {
            Trajectory traj(tg);
            SpectralField init = gen_taylor_green(g, amp);
            traj.states.push_back(init);
            SpectralField later = gen_taylor_green(g, amp == 0.1 ? 3.0 : 0.01);
            traj.states.push_back(later);
            traj.states.push_back(later);
            runs.push_back(std::move(traj));
        }
        CaseReport rep = h2_bound_check(runs, "unit-rigged");
        CHECK_FALSE(rep.pass);
        CHECK(rep.detail == "sup ||u||_{2,2} not monotone in ||u0||_{1,2}");
    }

    SUBCASE("empty ensemble never passes") {
        CHECK_FALSE(h2_bound_check({}, "unit-empty").pass);
    }
}

TEST_CASE("higher-regularity weight check") {
    const Grid g(3, 16);
    SpectralField phi = gen_random_sobolev(g, 3.0, 11, 0.2);

    SUBCASE("smooth heat flow with r = s1 has a flat weight and passes") {
        Trajectory traj = gamma(phi, TimeGrid::log_graded(0.1, 41, 1e-5), 1.0);
        CaseReport rep = higher_reg_weight_check(traj, 1.0, 1.0, 2.0, 1e-6, 1e-1, "unit");
        CHECK(rep.pass);
    }

    SUBCASE("too few nodes in the earliest decade is an explicit failure") {
        Trajectory traj = gamma(phi, TimeGrid::uniform(0.1, 11), 1.0);
        CaseReport rep = higher_reg_weight_check(traj, 1.0, 2.0, 2.0, 1e-6, 1e-1, "unit-sparse");
        CHECK_FALSE(rep.pass);
        CHECK(rep.detail == "insufficient early-time samples");
    }
}

TEST_CASE("smoothing-rate harness at coinciding indices") {
    // s2 = s1 means no smoothing is needed: slope 0 for small times
    CaseReport rep = smoothing_rate_experiment(1.0, 1.0, 2.0, 42, 3, 32, 1e-6, 1e-4, 0.0, 0.02);
    CHECK(rep.pass);
    CHECK(std::abs(rep.measured.at("slope")) <= 0.02);
}

TEST_CASE("projector experiments on a small grid") {
    CaseReport eq = projector_equivalence_experiment(2, 16, 2, {0.1, 1.0}, 5);
    CHECK(eq.pass);
    CaseReport idem = projector_idempotence_experiment(2, 16, 7);
    CHECK(idem.pass);
    CHECK_THROWS_AS((void)tau_scaling_experiment(2, 16), std::invalid_argument);
}
