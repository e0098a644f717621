#include <doctest.h>

#include <cmath>

#include "difflab/bvfunc.hpp"
#include "difflab/diffeo.hpp"
#include "difflab/rng.hpp"
#include "difflab/variation.hpp"

using namespace difflab;

namespace {

BVFunc random_mixed(Rng& rng) {
    std::vector<double> breaks{0.0, rng.uniform(0.2, 0.8), 1.0};
    std::vector<Polynomial> pieces;
    for (int i = 0; i < 2; ++i) {
        std::vector<double> c(4);
        for (double& v : c) v = rng.uniform(-1.5, 1.5);
        pieces.emplace_back(std::move(c));
    }
    PiecewisePolynomial ac(std::move(breaks), std::move(pieces));
    std::vector<SingularStaircase> stairs;
    if (rng.uniform() < 0.6) {
        double a = rng.uniform(0.1, 0.5);
        stairs.emplace_back(4 + static_cast<int>(rng.uniform_int(4)), a,
                            a + rng.uniform(0.1, 0.4), rng.uniform(-1.0, 1.0), 0.0);
    }
    return {std::move(ac), std::move(stairs)};
}

}  // namespace

TEST_CASE("oracle resolves the three monotone arcs of sin(2 pi x)") {
    RealFunction f([](double x) { return std::sin(2.0 * M_PI * x); }, {0.25, 0.75});
    VariationResult r = variation_oracle(f, Interval::unit(), 1e-9);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(4.0).epsilon(1e-8));
    for (std::size_t i = 1; i < r.lower_bounds.size(); ++i)
        CHECK(r.lower_bounds[i] >= r.lower_bounds[i - 1] - 1e-12);
}

TEST_CASE("oracle is exact on the staircase once edges are in the partition") {
    BVFunc c = cantor(10);
    VariationResult r = c.total_variation_oracle(Interval::unit(), 1e-9);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("piecewise polynomial variation: up then down") {
    PiecewisePolynomial poly =
        PiecewisePolynomial::from_global(Polynomial({0.0, 1.0, -1.0}));
    BVFunc f(poly);
    CHECK(f.total_variation() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.total_variation(Interval(0.0, 0.5)) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("variation additivity at a split point") {
    Rng rng(2024);
    for (int t = 0; t < 20; ++t) {
        BVFunc f = random_mixed(rng);
        double c = rng.uniform(0.0, 0.3), d = rng.uniform(0.7, 1.0);
        double e = rng.uniform(c + 0.1, d - 0.1);
        double lhs = f.total_variation(Interval(c, e)) + f.total_variation(Interval(e, d));
        double rhs = f.total_variation(Interval(c, d));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
}

TEST_CASE("scaling and constant shift leave variation as expected") {
    Rng rng(7);
    for (int t = 0; t < 12; ++t) {
        BVFunc f = random_mixed(rng);
        double k = rng.uniform(-3.0, 3.0);
        double v = f.total_variation();
        CHECK(f.scaled(k).total_variation() ==
              doctest::Approx(std::abs(k) * v).epsilon(1e-8));
        BVFunc shifted = linear_combine(
            {1.0, 1.0}, {f, BVFunc(PiecewisePolynomial::constant(rng.uniform(-2, 2)))});
        CHECK(shifted.total_variation() == doctest::Approx(v).epsilon(1e-8));
    }
}

TEST_CASE("variation is invariant under composition with increasing homeos") {
    Rng rng(11);
    for (int t = 0; t < 8; ++t) {
        BVFunc f = random_mixed(rng);
        double a1 = rng.uniform(-1.0, 1.0), a2 = rng.uniform(-0.6, 0.6);
        Diffeo u = Diffeo::from_log_derivative(
            BVFunc(PiecewisePolynomial::from_global(Polynomial({0.0, a1, a2}))),
            Manifold::Interval, 0.0, 1);
        double direct = f.total_variation(Interval::unit(), 1e-9);
        double composed = variation_oracle(compose_with(f, u), Interval::unit(), 1e-9).value;
        CHECK(composed == doctest::Approx(direct).epsilon(1e-7));
        CHECK(composed_total_variation(f, u) == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("variation is invariant under circle rotations") {
    // seam-compatible F (F(0) = F(1)): the wrapped composition has no jump
    for (double h : {0.1, 0.33, 0.718, 0.5}) {
        BVFunc f = separated_family_member(1.3, 0.02, 8);
        Diffeo u = Diffeo::rotation(h);
        double direct = f.total_variation(Interval::unit(), 1e-9);
        double composed =
            variation_oracle(compose_with(f, u), Interval::unit(), 1e-9).value;
        CHECK(composed == doctest::Approx(direct).epsilon(1e-8));
    }
    // F(0) != F(1): the [0,1] representative picks up the seam jump exactly
    BVFunc g = cantor(8);
    Diffeo u = Diffeo::rotation(0.25);
    double composed_g =
        variation_oracle(compose_with(g, u), Interval::unit(), 1e-9).value;
    CHECK(composed_g ==
          doctest::Approx(g.total_variation() + std::abs(g.eval(1.0) - g.eval(0.0)))
              .epsilon(1e-7));
}

TEST_CASE("circle composition invariance for seam-compatible functions") {
    // F with F(0) = F(1) composes with any circle homeo without a seam jump
    Rng rng(17);
    for (int t = 0; t < 6; ++t) {
        BVFunc f = separated_family_member(1.0 + rng.uniform(), rng.uniform(-0.1, 0.1), 8);
        double a1 = rng.uniform(-0.8, 0.8);
        Polynomial gp = Polynomial({0.0, a1, -a1});
        Diffeo u = Diffeo::from_log_derivative(
            BVFunc(PiecewisePolynomial::from_global(gp)), Manifold::Circle,
            rng.uniform(), 1);
        double direct = f.total_variation(Interval::unit(), 1e-9);
        double composed = variation_oracle(compose_with(f, u), Interval::unit(), 1e-9).value;
        CHECK(composed == doctest::Approx(direct).epsilon(1e-7));
    }
}

TEST_CASE("ac variation identity: V(F) equals the L1 norm of its derivative") {
    Rng rng(23);
    for (int t = 0; t < 15; ++t) {
        std::vector<double> cs(5);
        for (double& v : cs) v = rng.uniform(-2.0, 2.0);
        BVFunc f(PiecewisePolynomial::from_global(Polynomial(cs)));
        double v = f.total_variation();
        double l1 = l1_norm(f.derivative_ae(), Interval::unit(), 1e-10);
        CHECK(v == doctest::Approx(l1).epsilon(1e-7));
    }
}

TEST_CASE("bv norm behaves like a norm on sampled functions") {
    Rng rng(29);
    for (int t = 0; t < 10; ++t) {
        BVFunc a = random_mixed(rng);
        BVFunc b = random_mixed(rng);
        double na = a.bv_norm(), nb = b.bv_norm();
        double nsum = linear_combine({1.0, 1.0}, {a, b}).bv_norm();
        CHECK(nsum <= na + nb + 1e-7);
        double k = rng.uniform(-2.0, 2.0);
        CHECK(a.scaled(k).bv_norm() == doctest::Approx(std::abs(k) * na).epsilon(1e-7));
    }
}

TEST_CASE("structural fast path agrees with the oracle") {
    BVFunc c = cantor(12);
    CHECK(c.structural_variation_available());
    CHECK(c.total_variation() ==
          doctest::Approx(c.total_variation_oracle().value).epsilon(1e-10));

    BVFunc f = separated_family_member(2.0, 0.05, 10);
    CHECK(f.structural_variation_available());
    CHECK(f.total_variation() ==
          doctest::Approx(f.total_variation_oracle().value).epsilon(1e-10));

    // overlapping translates force the oracle
    SingularStaircase s = cantor_staircase(8);
    BVFunc overlap = linear_combine(
        {1.0, -1.0}, {BVFunc(s), BVFunc(s.translated(2.0 / 3.0))});
    CHECK(!overlap.structural_variation_available());
}
