#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "difflab/quadrature.hpp"

using namespace difflab;

TEST_CASE("closed forms") {
    RealFunction sq([](double x) { return x * x; });
    CHECK(integrate(sq, 0.0, 1.0).value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    RealFunction ex([](double x) { return std::exp(x); });
    CHECK(integrate(ex, 0.0, 1.0, 1e-12).value ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));

    // orientation
    CHECK(integrate(sq, 1.0, 0.0).value == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("kinked and discontinuous integrands with breakpoint splits") {
    RealFunction kink([](double x) { return std::abs(1.0 - 2.0 * x); }, {0.5});
    CHECK(integrate(kink, 0.0, 1.0, 1e-10).value == doctest::Approx(0.5).epsilon(1e-9));

    RealFunction step([](double x) { return x < 0.3 ? 1.0 : -2.0; }, {0.3});
    CHECK(integrate(step, 0.0, 1.0, 1e-10).value ==
          doctest::Approx(0.3 - 1.4).epsilon(1e-9));

    RealFunction osc([](double x) { return std::sin(40.0 * x); });
    CHECK(integrate(osc, 0.0, 1.0, 1e-11).value ==
          doctest::Approx((1.0 - std::cos(40.0)) / 40.0).epsilon(1e-9));
}

TEST_CASE("absolute-value integration") {
    RealFunction lin([](double x) { return 1.0 - 2.0 * x; });
    CHECK(integrate_abs(lin, 0.0, 1.0, 1e-10).value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("error bound is reported and within budget") {
    RealFunction f([](double x) { return std::sin(3.0 * x) * std::exp(x); });
    QuadratureResult r = integrate(f, 0.0, 1.0, 1e-9);
    CHECK(r.error_bound <= 1e-9);
    CHECK(r.evaluations > 0);
}

TEST_CASE("non-integrable singularity exhausts the refinement depth") {
    RealFunction bad([](double x) { return 1.0 / (x + 1e-300); });
    CHECK_THROWS_AS(integrate(bad, 0.0, 1.0, 1e-9), std::runtime_error);
}
