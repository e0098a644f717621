#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "difflab/bvfunc.hpp"
#include "difflab/quadrature.hpp"

using namespace difflab;

TEST_CASE("cantor staircase values follow the ternary digit map") {
    BVFunc c = cantor(20);
    CHECK(c.eval(0.0) == 0.0);
    CHECK(c.eval(1.0) == 1.0);
    // 1/2 lies in the first removed gap
    CHECK(c.eval(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    // ternary 0.02 maps to binary 0.01
    CHECK(c.eval(2.0 / 9.0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(c.eval(1.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-12));
    // monotone
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        double v = c.eval(i / 200.0);
        CHECK(v >= prev - 1e-15);
        prev = v;
    }
}

TEST_CASE("cantor variation and active set bookkeeping") {
    for (int depth : {1, 5, 12, 20}) {
        BVFunc c = cantor(depth);
        CHECK(c.total_variation() == doctest::Approx(1.0).epsilon(1e-12));
        SingularStaircase s = cantor_staircase(depth);
        CHECK(s.active_total_length() ==
              doctest::Approx(std::pow(2.0 / 3.0, depth)).epsilon(1e-12));
        if (depth <= 12) {
            double total = 0.0;
            std::size_t count = 0;
            s.for_each_active_interval([&](double lo, double hi) {
                total += hi - lo;
                ++count;
            });
            CHECK(count == (std::size_t{1} << depth));
            CHECK(total == doctest::Approx(s.active_total_length()).epsilon(1e-9));
        }
    }
}

TEST_CASE("staircase ramp derivative is zero off the active set") {
    SingularStaircase s = cantor_staircase(8);
    CHECK(s.ramp_derivative(0.5) == 0.0);  // first removed gap
    CHECK(!s.in_active_set(0.5));
    // a point deep inside the leftmost ramp
    double x = 0.5 * std::pow(3.0, -8);
    CHECK(s.in_active_set(x));
    CHECK(s.ramp_derivative(x) == doctest::Approx(std::pow(1.5, 8)).epsilon(1e-12));
}

TEST_CASE("eval rejects points outside the unit interval") {
    BVFunc c = cantor(6);
    CHECK_THROWS_AS(c.eval(-0.1), std::domain_error);
    CHECK_THROWS_AS(c.eval(1.1), std::domain_error);
}

TEST_CASE("separated family member matches its case definition") {
    double r = 1.0;
    BVFunc f = separated_family_member(r, 0.0, 16);
    CHECK(f.eval(0.0) == 0.0);
    CHECK(f.eval(1.0) == 0.0);
    CHECK(f.eval(0.5) == doctest::Approx(0.5 * r).epsilon(1e-12));
    CHECK(f.eval(0.4) == doctest::Approx(0.5 * r).epsilon(1e-12));  // plateau
    CHECK(f.eval(0.1) == 0.0);
    CHECK(f.eval(0.9) == 0.0);
    CHECK(f.total_variation() == doctest::Approx(r).epsilon(1e-12));
    CHECK(f.bv_norm() == doctest::Approx(r).epsilon(1e-12));

    BVFunc g = separated_family_member(2.5, 0.125, 12);
    CHECK(g.bv_norm() == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(g.eval(0.5 - 0.125) == doctest::Approx(1.25).epsilon(1e-12));

    CHECK_THROWS_AS(separated_family_member(1.0, 0.2, 12), std::invalid_argument);
    CHECK_THROWS_AS(separated_family_member(-1.0, 0.0, 12), std::invalid_argument);
}

TEST_CASE("pairwise family distance doubles at exactly misaligned offsets") {
    const int depth = 12;
    // inner shifts land on the odd misalignment lattice: h = odd * 3^-depth / 6
    double h1 = 0.0;
    double h2 = 1001.0 * std::pow(3.0, -depth) / 6.0;
    BVFunc f1 = separated_family_member(1.0, h1, depth);
    BVFunc f2 = separated_family_member(1.0, h2, depth);
    BVFunc diff = linear_combine({1.0, -1.0}, {f1, f2});
    CHECK(diff.bv_norm() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("linear combinations") {
    BVFunc f = separated_family_member(1.0, 0.01, 10);
    BVFunc zero = linear_combine({1.0, -1.0}, {f, f});
    for (int i = 0; i <= 40; ++i)
        CHECK(zero.eval(i / 40.0) == doctest::Approx(0.0));

    // V(K F) = |K| V(F)
    BVFunc c = cantor(10);
    CHECK(c.scaled(-3.0).total_variation() == doctest::Approx(3.0).epsilon(1e-12));
    BVFunc k3 = linear_combine({-3.0}, {c});
    CHECK(k3.total_variation() == doctest::Approx(3.0).epsilon(1e-12));

    // V(F + K) = V(F)
    BVFunc shifted =
        linear_combine({1.0, 1.0}, {c, BVFunc(PiecewisePolynomial::constant(7.5))});
    CHECK(shifted.total_variation() == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(linear_combine({1.0, 2.0}, {c}), std::invalid_argument);
    CHECK_THROWS_AS(linear_combine({}, {}), std::invalid_argument);
}

TEST_CASE("lebesgue decomposition accessors") {
    PiecewisePolynomial poly =
        PiecewisePolynomial::from_global(Polynomial({0.0, 1.0, -1.0}));  // x - x^2
    BVFunc pure(poly);
    auto [ac1, sing1] = pure.lebesgue_parts();
    CHECK(sing1.singular().empty());
    CHECK(ac1.eval(0.3) == doctest::Approx(pure.eval(0.3)));

    BVFunc c = cantor(8);
    auto [ac2, sing2] = c.lebesgue_parts();
    CHECK(ac2.ac().is_zero(0.0));
    CHECK(sing2.eval(0.5) == doctest::Approx(0.5));

    BVFunc mixed(poly, {cantor_staircase(8)});
    auto [ac3, sing3] = mixed.lebesgue_parts();
    for (int i = 0; i <= 50; ++i) {
        double x = i / 50.0;
        CHECK(ac3.eval(x) + sing3.eval(x) ==
              doctest::Approx(mixed.eval(x)).epsilon(1e-14));
    }
}

TEST_CASE("a.e. derivative of the ac part and flags on the active set") {
    PiecewisePolynomial poly =
        PiecewisePolynomial::from_global(Polynomial({0.0, 1.0, -1.0}));
    BVFunc f(poly);
    DensityHandle d = f.derivative_ae();
    CHECK(d.everywhere_defined);
    for (double x : {0.1, 0.25, 0.5, 0.9})
        CHECK(d.fn(x) == doctest::Approx(1.0 - 2.0 * x).epsilon(1e-13));

    BVFunc c = cantor(8);
    DensityHandle dc = c.derivative_ae();
    CHECK(!dc.everywhere_defined);
    CHECK(dc.fn(0.5) == 0.0);                            // plateau
    CHECK(std::isnan(dc.fn(0.5 * std::pow(3.0, -8))));   // on a ramp
    CHECK_THROWS_AS(l1_norm(dc), std::invalid_argument);
}

TEST_CASE("fundamental theorem of calculus round trip on the ac part") {
    PiecewisePolynomial poly(
        {0.0, 0.4, 1.0},
        {Polynomial({0.0, 1.0, 0.5}), Polynomial({0.0, -0.3, 0.2, 0.1})});
    BVFunc f(poly);
    DensityHandle d = f.derivative_ae();
    for (int i = 1; i <= 20; ++i) {
        double x = i / 20.0;
        double integral = integrate(d.fn, 0.0, x, 1e-10).value;
        CHECK(integral == doctest::Approx(f.eval(x) - f.eval(0.0)).epsilon(1e-8));
    }
}

TEST_CASE("l1 norm examples") {
    RealFunction zero([](double) { return 0.0; });
    CHECK(l1_norm(zero) == doctest::Approx(0.0));
    RealFunction lin([](double x) { return 1.0 - 2.0 * x; }, {0.5});
    CHECK(l1_norm(lin) == doctest::Approx(0.5).epsilon(1e-9));
    RealFunction c([](double) { return -2.75; });
    CHECK(l1_norm(c) == doctest::Approx(2.75).epsilon(1e-12));
}

TEST_CASE("uniform norm examples") {
    RealFunction zero([](double) { return 0.0; });
    CHECK(uniform_norm(zero) == doctest::Approx(0.0));
    PiecewisePolynomial poly =
        PiecewisePolynomial::from_global(Polynomial({0.0, 1.0, -1.0}));
    BVFunc f(poly);
    CHECK(uniform_norm(f.as_real_function()) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(uniform_norm(cantor(12).as_real_function()) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("piecewise polynomial continuity is stitched exactly") {
    PiecewisePolynomial a({0.0, 0.3, 1.0},
                          {Polynomial({0.2, 1.0, -0.5}), Polynomial({0.0, 0.4, 0.7})});
    const auto& bp = a.breakpoints();
    for (std::size_t i = 1; i + 1 < bp.size(); ++i) {
        double left = a.pieces()[i - 1].eval(bp[i] - bp[i - 1]);
        double right = a.pieces()[i].eval(0.0);
        CHECK(left == right);  // exact, by construction
    }
}
