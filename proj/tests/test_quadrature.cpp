#include <doctest.h>

#include <cmath>

#include "gwe/errors.hpp"
#include "gwe/quadrature.hpp"

using namespace gwe;

TEST_CASE("polynomials are integrated to near machine accuracy") {
    const auto r = integrate_unit([](double u) { return 3.0 * u * u; });
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.abs_error <= 1e-9);
    CHECK(r.evaluations >= 15);
}

TEST_CASE("logarithmic kernels, both orientations") {
    const auto a = integrate_unit([](double u) { return -u * std::log1p(-u); });
    CHECK(a.value == doctest::Approx(0.75).epsilon(1e-10));
    const auto b =
        integrate_unit([](double u) { return -(1.0 - u) * std::log1p(-u); });
    CHECK(b.value == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("integrable endpoint singularity") {
    const auto r = integrate_unit([](double u) { return 1.0 / std::sqrt(u); });
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("oscillatory integrand") {
    const auto r = integrate_unit([](double u) { return std::sin(40.0 * u); });
    CHECK(r.value ==
          doctest::Approx((1.0 - std::cos(40.0)) / 40.0).epsilon(1e-9));
}

TEST_CASE("tiny magnitudes are resolved relative to scale") {
    const auto r = integrate_unit([](double u) { return 1e-20 * u; });
    CHECK(r.value == doctest::Approx(5e-21).epsilon(1e-9));
}

TEST_CASE("non-integrable singularity exhausts the budget") {
    CHECK_THROWS_AS(
        integrate_unit([](double u) { return 1.0 / u; }, 1e-9, 1e-12, 4000),
        accuracy_error);
    try {
        integrate_unit([](double u) { return 1.0 / u; }, 1e-9, 1e-12, 4000);
    } catch (const accuracy_error& e) {
        CHECK(e.best_estimate > 1.0);   // carries the partial estimate
        CHECK(e.error_estimate > 0.0);
    }
}

TEST_CASE("beta-like mass concentrated near an endpoint") {
    // 20 u^19 integrates to 1 with nearly all mass in the last few percent
    const auto r = integrate_unit([](double u) { return 20.0 * std::pow(u, 19.0); });
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}
