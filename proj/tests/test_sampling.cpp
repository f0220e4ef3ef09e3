#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gwe/distribution.hpp"
#include "gwe/errors.hpp"
#include "gwe/prss.hpp"
#include "gwe/sampling.hpp"
#include "gwe/weight.hpp"

using namespace gwe;

TEST_CASE("random source determinism and stream independence") {
    random_source a(12345);
    random_source b(12345);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform01();
        CHECK(u == b.uniform01());
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }

    // split depends only on the root seed, not on parent consumption
    random_source parent(99);
    random_source s1 = parent.split(7);
    for (int i = 0; i < 17; ++i) (void)parent.uniform01();
    random_source s2 = parent.split(7);
    for (int i = 0; i < 100; ++i) CHECK(s1.uniform01() == s2.uniform01());

    random_source c1 = parent.split(1);
    random_source c2 = parent.split(2);
    bool differ = false;
    for (int i = 0; i < 10; ++i)
        if (c1.uniform01() != c2.uniform01()) differ = true;
    CHECK(differ);
}

TEST_CASE("draw matches population moments") {
    random_source rng(7);
    const int n = 100000;
    const auto us = draw(make_uniform(0.0, 1.0), rng, n);
    REQUIRE(int(us.size()) == n);
    const double mu =
        std::accumulate(us.begin(), us.end(), 0.0) / double(n);
    CHECK(mu == doctest::Approx(0.5).epsilon(0.02));

    const auto es = draw(make_exponential(1.0), rng, n);
    const double me =
        std::accumulate(es.begin(), es.end(), 0.0) / double(n);
    CHECK(me == doctest::Approx(1.0).epsilon(0.02));

    CHECK(draw(make_uniform(0.0, 1.0), rng, 0).empty());
    CHECK_THROWS_AS(draw(make_uniform(0.0, 1.0), rng, -1), parameter_error);
}

TEST_CASE("order statistic sampler matches known means") {
    random_source rng(11);
    const auto uni = make_uniform(0.0, 1.0);
    const int reps = 60000;
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < reps; ++i) {
        s1 += sample_order_statistic(uni, 1, 2, rng);
        s2 += sample_order_statistic(uni, 2, 2, rng);
    }
    CHECK(s1 / reps == doctest::Approx(1.0 / 3.0).epsilon(0.03));
    CHECK(s2 / reps == doctest::Approx(2.0 / 3.0).epsilon(0.03));
    CHECK_THROWS_AS(sample_order_statistic(uni, 0, 2, rng), parameter_error);
}

TEST_CASE("percentile sampling dataset layout") {
    random_source rng(5);
    const auto ds =
        sample_prss(make_uniform(0.0, 1.0), make_design(3, 0.3, 2), rng);
    REQUIRE(ds.rows.size() == 6);
    // per cycle: low-rank set, high-rank set, then the median set
    const int want_rank[3] = {1, 3, 2};
    for (int c = 0; c < 2; ++c) {
        for (int s = 0; s < 3; ++s) {
            const auto& row = ds.rows[size_t(c * 3 + s)];
            CHECK(row.cycle == c + 1);
            CHECK(row.set_index == s + 1);
            CHECK(row.rank == want_rank[s]);
            CHECK(row.value >= 0.0);
            CHECK(row.value <= 1.0);
        }
    }

    const auto d4 =
        sample_prss(make_uniform(0.0, 1.0), make_design(4, 0.3, 1), rng);
    REQUIRE(d4.rows.size() == 4);
    CHECK(d4.rows[0].rank == 2);
    CHECK(d4.rows[1].rank == 2);
    CHECK(d4.rows[2].rank == 4);
    CHECK(d4.rows[3].rank == 4);

    const auto d0 =
        sample_prss(make_uniform(0.0, 1.0), make_design(3, 0.3, 0), rng);
    CHECK(d0.rows.empty());
}

TEST_CASE("stratum expectation estimator") {
    const auto uni = make_uniform(0.0, 1.0);
    random_source rng(3);
    // constant weight integrates the beta density: exactly one
    const auto [m1, se1] =
        mc_stratum_expectation(uni, make_weight_constant_one(), 1, 2, rng, 5000);
    CHECK(m1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(se1 <= 1e-12);

    const auto [m2, se2] = mc_stratum_expectation(
        uni, make_weight_power(1.0), 1, 2, rng, 200000);
    CHECK(se2 > 0.0);
    CHECK(std::fabs(m2 - 0.25) <= 3.0 * se2 + 1e-12);

    const auto [m3, se3] = mc_stratum_expectation(
        make_exponential(1.0), make_weight_constant_one(), 1, 1, rng, 200000);
    CHECK(std::fabs(m3 - 0.5) <= 3.0 * se3);

    CHECK_THROWS_AS(
        mc_stratum_expectation(uni, make_weight_power(1.0), 1, 2, rng, 1),
        mc_error);
}

TEST_CASE("monte carlo design estimate") {
    const auto exp1 = make_exponential(1.0);
    const weight wx = make_weight_power(1.0);
    const prss_design des = make_design(2, 0.3);

    random_source rng(17);
    const auto r = mc_gwe_prss(exp1, wx, des, rng, 200000);
    CHECK(r.method == "monte_carlo");
    CHECK(r.error_estimate > 0.0);
    CHECK(std::fabs(r.value.value() - (-13.0 / 288.0)) <=
          3.0 * r.error_estimate);

    // same seed, same estimate, bitwise
    random_source rng2(17);
    const auto r2 = mc_gwe_prss(exp1, wx, des, rng2, 200000);
    CHECK(r.value.value() == r2.value.value());
    CHECK(r.error_estimate == r2.error_estimate);

    // factor expectations come from per-rank child streams
    random_source root(17);
    for (const auto& f : r.factors) {
        random_source child = root.split(f.rank);
        const auto [m, se] =
            mc_stratum_expectation(exp1, wx, f.rank, des.n, child, 200000);
        CHECK(f.expectation == m);
        CHECK(f.abs_error == se);
    }
}

TEST_CASE("monte carlo rejects an unusable mean under nonnegative weight") {
    // support entirely below zero, weight x: every stratum mean is negative
    random_source rng(23);
    CHECK_THROWS_AS(mc_gwe_prss(make_uniform(-2.0, -1.0),
                                make_weight_power(1.0), make_design(2, 0.3),
                                rng, 1000),
                    mc_error);
}

TEST_CASE("distribution fit statistic") {
    const double crit = ks_critical_value(10000, 0.001);
    CHECK(crit == doctest::Approx(0.019494746035204052).epsilon(1e-12));
    CHECK_THROWS_AS(ks_critical_value(0, 0.001), parameter_error);
    CHECK_THROWS_AS(ks_critical_value(100, 0.0), parameter_error);

    random_source rng(31);
    const auto uni = make_uniform(0.0, 1.0);
    std::vector<double> xs = draw(uni, rng, 2000);
    const double d_ok =
        ks_statistic(xs, [&](double x) { return uni.cdf(x); });
    CHECK(d_ok < ks_critical_value(2000, 0.001));

    std::vector<double> shifted = xs;
    for (double& x : shifted) x = std::min(1.0, x + 0.2);
    const double d_bad =
        ks_statistic(shifted, [&](double x) { return uni.cdf(x); });
    CHECK(d_bad > ks_critical_value(2000, 0.001));
}

TEST_CASE("sampled strata follow the order statistic law") {
    const auto exp1 = make_exponential(1.0);
    random_source rng(41);
    const int reps = 4000;
    for (int rank : {1, 3}) {
        std::vector<double> xs(static_cast<std::size_t>(reps));
        for (int i = 0; i < reps; ++i)
            xs[size_t(i)] = sample_order_statistic(exp1, rank, 3, rng);
        const double d = ks_statistic(xs, [&](double x) {
            return order_statistic_cdf(exp1, rank, 3, x);
        });
        CHECK(d < ks_critical_value(reps, 0.001));
    }
}
