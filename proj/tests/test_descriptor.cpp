#include <doctest.h>

#include <cmath>

#include "difflab/descriptor.hpp"

using namespace difflab;

TEST_CASE("function descriptor round trip is value-exact") {
    PiecewisePolynomial ac({0.0, 0.37, 1.0},
                           {Polynomial({0.1, -0.7, 0.3}), Polynomial({0.0, 1.0 / 3.0})});
    BVFunc f(ac, {SingularStaircase(14, 1.0 / 6.0, 1.0 / 3.0, 0.5, 0.01),
                  SingularStaircase(14, 2.0 / 3.0, 5.0 / 6.0, -0.5, 0.01)});
    nlohmann::json j = to_json(f);
    BVFunc g = bvfunc_from_json(j);

    REQUIRE(g.ac().breakpoints().size() == f.ac().breakpoints().size());
    for (std::size_t i = 0; i < f.ac().breakpoints().size(); ++i)
        CHECK(g.ac().breakpoints()[i] == f.ac().breakpoints()[i]);
    for (std::size_t i = 0; i < f.ac().pieces().size(); ++i) {
        const auto& a = f.ac().pieces()[i].coeffs();
        const auto& b = g.ac().pieces()[i].coeffs();
        REQUIRE(a.size() == b.size());
        for (std::size_t c = 0; c < a.size(); ++c) CHECK(a[c] == b[c]);
    }
    REQUIRE(g.singular().size() == 2);
    CHECK(g.singular()[0].scale() == f.singular()[0].scale());
    CHECK(g.singular()[0].offset() == f.singular()[0].offset());
    CHECK(g.singular()[1].depth() == 14);

    // byte-for-byte evaluation agreement
    for (int i = 0; i <= 101; ++i) {
        double x = i / 101.0;
        CHECK(g.eval(x) == f.eval(x));
    }
    // serialize-parse-serialize is stable
    CHECK(to_json(g).dump() == j.dump());
}

TEST_CASE("rotations serialize with an empty log-derivative") {
    Diffeo r = Diffeo::rotation(0.375, 2);
    nlohmann::json j = to_json(r);
    CHECK(j["log_derivative"].is_null());
    CHECK(j["manifold"] == "circle");
    CHECK(j["rotation_offset"] == 0.375);
    Diffeo back = diffeo_from_json(j);
    CHECK(back.is_rotation());
    CHECK(back.order() == 2);
    CHECK(back.eval(0.5) == doctest::Approx(0.875));

    nlohmann::json ji = to_json(Diffeo::identity(Manifold::Interval, 1));
    CHECK(ji["log_derivative"].is_null());
    CHECK(diffeo_from_json(ji).eval(0.42) == doctest::Approx(0.42));
}

TEST_CASE("log-derivative diffeos round trip through their descriptor") {
    BVFunc g(PiecewisePolynomial::from_global(Polynomial({0.0, 0.5, -0.2})),
             {SingularStaircase(10, 0.2, 0.5, 0.4, 0.0)});
    // interval: singular part allowed
    Diffeo f = Diffeo::from_log_derivative(
        BVFunc(PiecewisePolynomial::from_global(Polynomial({0.0, 0.5, -0.2}))),
        Manifold::Interval, 0.0, 2);
    nlohmann::json j = to_json(f);
    Diffeo back = diffeo_from_json(j);
    CHECK(back.manifold() == Manifold::Interval);
    CHECK(back.order() == 2);
    for (int i = 0; i <= 50; ++i) {
        double x = i / 50.0;
        CHECK(back.eval(x) == doctest::Approx(f.eval(x)).epsilon(1e-13));
        CHECK(back.derivative(x, 1) == doctest::Approx(f.derivative(x, 1)).epsilon(1e-12));
    }
    CHECK(to_json(diffeo_from_json(j)).dump() == j.dump());

    Diffeo fb = Diffeo::from_log_derivative(g, Manifold::Interval, 0.0, 1);
    Diffeo fb2 = diffeo_from_json(to_json(fb));
    CHECK(fb2.reg_class() == RegClass::CkBV);
    CHECK(fb2.eval(0.3) == doctest::Approx(fb.eval(0.3)).epsilon(1e-13));
}

TEST_CASE("metric values serialize with named summands") {
    MetricValue m = MetricValue::from_summands({{"sup", 0.25}, {"C1", 0.5}});
    nlohmann::json j = to_json(m);
    CHECK(j["total"] == 0.75);
    CHECK(j["summands"]["sup"] == 0.25);
    CHECK(j["summands"]["C1"] == 0.5);
}
