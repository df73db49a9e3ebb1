#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mcchan/harness.hpp"
#include "support.hpp"

using namespace mcchan;

TEST_CASE("aggregate computes mean and standard error") {
    auto agg = aggregate({{1, 10}, {3, 10}, {5, 10}});
    CHECK(agg.mean[0] == doctest::Approx(3.0));
    CHECK(agg.mean[1] == doctest::Approx(10.0));
    CHECK(agg.std_err[0] == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(agg.std_err[1] == doctest::Approx(0.0));
}

TEST_CASE("aggregate rejects empty and ragged input") {
    CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
    CHECK_THROWS_AS(aggregate({{1, 2}, {1}}), std::invalid_argument);
}

TEST_CASE("log_spaced hits both endpoints and grows monotonically") {
    auto g = log_spaced(0.01, 10.0, 7);
    REQUIRE(g.size() == 7);
    CHECK(g.front() == doctest::Approx(0.01).epsilon(1e-13));
    CHECK(g.back() == doctest::Approx(10.0).epsilon(1e-13));
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    CHECK_THROWS_AS(log_spaced(0.0, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(log_spaced(1.0, 2.0, 1), std::invalid_argument);
}

TEST_CASE("trial batches are identical for any worker count") {
    auto rc = parse_config(mcchan::testing::small_config_text(200, 2000, 2e-19));
    auto cfg = rc.to_sim_config();
    auto s1 = run_batch(cfg, 12, 1);
    auto s3 = run_batch(cfg, 12, 3);
    auto s8 = run_batch(cfg, 12, 8);
    CHECK(s1.counts == s3.counts);
    CHECK(s1.counts == s8.counts);
    CHECK(s1.t_seconds == s3.t_seconds);
    CHECK(s1.mean == s8.mean);
}

TEST_CASE("accuracy run pairs the simulation with its analytic envelope") {
    auto rc = parse_config(mcchan::testing::small_config_text(200, 2000, 2e-19));
    auto curve = run_accuracy(rc.to_sim_config(), 8);
    REQUIRE(curve.sim.t_star.size() == 6);
    CHECK(curve.n_a == 200);
    for (std::size_t j = 0; j < curve.sim.t_star.size(); ++j) {
        CHECK(curve.mean_star[j] == doctest::Approx(curve.sim.mean[j] / 200.0).epsilon(1e-13));
        // the enzymatic bound never exceeds the enzyme-free estimate
        CHECK(curve.lower_bound_star[j] <= curve.no_enzyme_star[j]);
    }
    CHECK(curve.constants.gamma_1a > 0);
}

TEST_CASE("uniform deviation shrinks with the receiver and with time") {
    auto table = run_uniform_test({0.05, 0.15, 0.3}, log_spaced(0.05, 10.0, 30));
    REQUIRE(table.sphere.size() == 3);
    // max|deviation| grows with receiver size
    std::vector<double> peak;
    for (const auto& row : table.sphere) {
        double m = 0;
        for (const auto& d : row)
            if (d) m = std::max(m, std::fabs(*d));
        peak.push_back(m);
    }
    CHECK(peak[0] < peak[1]);
    CHECK(peak[1] < peak[2]);
    // and vanishes at late times
    for (const auto& row : table.sphere) CHECK(std::fabs(*row.back()) < 0.005);
    CHECK_THROWS_AS(run_uniform_test({1.5}, {0.1}), std::invalid_argument);
}

TEST_CASE("homology report flags matching and non-matching systems") {
    auto a = mcchan::testing::system1_small();
    auto b = mcchan::testing::system2_small();
    auto rep = run_homology_check(a.to_system_params(), a.to_reference_set(),
                                  b.to_system_params(), b.to_reference_set(), 1e-9);
    CHECK(rep.homologous);
    CHECK(rep.max_rel_diff < 1e-9);

    auto c = b;
    c.k2 *= 1.01;
    auto bad = run_homology_check(a.to_system_params(), a.to_reference_set(),
                                  c.to_system_params(), c.to_reference_set(), 1e-9);
    CHECK_FALSE(bad.homologous);
    CHECK(bad.max_rel_diff > 1e-9);
}

TEST_CASE("relative gap on a synthetic curve") {
    AccuracyCurve curve;
    curve.n_a = 10;
    curve.sim.t_star = {0.1, 0.2, 5.0};
    curve.lower_bound_star = {0.05, 0.1, 0.01};
    curve.sim.counts = {{1, 2, 0}, {1, 2, 0}};  // counts / (n_a * bound) = 2 at both kept times
    auto g = relative_gap(curve, 0.05, 1.0);  // excludes the t* = 5 sample
    CHECK(g.mean == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(g.std_err == doctest::Approx(0.0));
    CHECK_THROWS_AS(relative_gap(curve, 20.0, 30.0), std::invalid_argument);
}
