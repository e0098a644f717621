#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "difflab/metrics.hpp"
#include "difflab/rng.hpp"

using namespace difflab;

namespace {

Diffeo random_smooth(Rng& rng, Manifold m, int k) {
    double a1 = rng.uniform(-0.8, 0.8), a2 = rng.uniform(-0.5, 0.5);
    Polynomial g = m == Manifold::Circle
                       ? Polynomial({0.0, a1, -a1}) +
                             Polynomial({0.0, 0.0, a2, -2.0 * a2, a2})
                       : Polynomial({0.0, a1, a2});
    double rho = m == Manifold::Circle ? rng.uniform() : 0.0;
    return Diffeo::from_log_derivative(BVFunc(PiecewisePolynomial::from_global(g)), m,
                                       rho, k);
}

Diffeo half_parabola(int k = 1) {
    return Diffeo::from_polynomial_lift(
        PiecewisePolynomial::from_global(Polynomial({0.0, 0.5, 0.5})),
        Manifold::Interval, k);
}

}  // namespace

TEST_CASE("manifold distances") {
    CHECK(manifold_distance(Manifold::Interval, 0.2, 0.7) == doctest::Approx(0.5));
    CHECK(manifold_distance(Manifold::Circle, 0.0, 1.0) == doctest::Approx(0.0));
    CHECK(manifold_distance(Manifold::Circle, 0.0, 0.5) == doctest::Approx(2.0));
    CHECK(manifold_distance(Manifold::Circle, 0.1, 0.35) ==
          doctest::Approx(2.0 * std::sin(M_PI * 0.25)).epsilon(1e-12));
}

TEST_CASE("C^k distance: worked example and identity") {
    Diffeo f = half_parabola();
    Diffeo id = Diffeo::identity(Manifold::Interval, 1);
    MetricValue d = dist_ck(f, id, 1);
    // sup |x^2 - x|/2 = 1/8 at x = 1/2; sup |2x - 1|/2 = 1/2
    CHECK(d.summands[0].second == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(d.summands[1].second == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(d.total == doctest::Approx(0.625).epsilon(1e-9));
    CHECK(dist_ck(f, f, 1).total == doctest::Approx(0.0));
}

TEST_CASE("k+AC distance adds the L1 density term") {
    Diffeo f = half_parabola();
    Diffeo id = Diffeo::identity(Manifold::Interval, 1);
    MetricValue d = dist_k_ac(f, id, 1);
    CHECK(d.total == doctest::Approx(0.625 + 1.0).epsilon(1e-9));  // f'' = 1
    CHECK(dist_k_ac(f, f, 1).total == doctest::Approx(0.0));

    // BV-class arguments are outside this metric's domain
    BVFunc sing = separated_family_member(1.0, 0.0, 8);
    Diffeo g = Diffeo::from_log_derivative(sing, Manifold::Interval, 0.0, 1);
    CHECK_THROWS_AS(dist_k_ac(f, g, 1), std::invalid_argument);
}

TEST_CASE("summand decomposition and dominance") {
    Rng rng(71);
    for (int t = 0; t < 10; ++t) {
        Diffeo f = random_smooth(rng, Manifold::Interval, 1);
        Diffeo g = random_smooth(rng, Manifold::Interval, 1);
        MetricValue ck = dist_ck(f, g, 1);
        MetricValue ac = dist_k_ac(f, g, 1);
        double s = 0.0;
        for (const auto& [name, v] : ac.summands) {
            CHECK(v >= 0.0);
            s += v;
        }
        CHECK(std::abs(ac.total - s) <= 1e-12);
        // d >= d_Ck summand-wise and in total
        for (std::size_t i = 0; i < ck.summands.size(); ++i)
            CHECK(ac.summands[i].second ==
                  doctest::Approx(ck.summands[i].second).epsilon(1e-12));
        CHECK(ac.total >= ck.total - 1e-12);
    }
}

TEST_CASE("BV distance: rotations and the transported separated family") {
    Diffeo id = Diffeo::identity(Manifold::Circle, 1);
    for (double h : {0.01, 0.2, 0.5}) {
        MetricValue d = dist_1_bv(Diffeo::rotation(h), id);
        CHECK(d.summands[1].second == doctest::Approx(0.0));  // BV term
        CHECK(d.total == doctest::Approx(2.0 * std::abs(std::sin(M_PI * h))).epsilon(1e-9));
    }
    CHECK(dist_1_bv(id, id).total == doctest::Approx(0.0));

    // the 2r separation transports through log f' on exactly misaligned offsets
    const int depth = 10;
    double h2 = 501.0 * std::pow(3.0, -depth) / 6.0;
    Diffeo f1 = Diffeo::from_log_derivative(separated_family_member(1.0, 0.0, depth),
                                            Manifold::Interval, 0.0, 1);
    Diffeo f2 = Diffeo::from_log_derivative(separated_family_member(1.0, h2, depth),
                                            Manifold::Interval, 0.0, 1);
    MetricValue d = dist_1_bv(f1, f2);
    CHECK(d.summands[1].second == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("metric axioms on sampled triples") {
    Rng rng(73);
    for (int t = 0; t < 10; ++t) {
        Manifold m = t % 2 == 0 ? Manifold::Interval : Manifold::Circle;
        Diffeo f = random_smooth(rng, m, 1);
        Diffeo g = random_smooth(rng, m, 1);
        Diffeo h = random_smooth(rng, m, 1);
        auto check_metric = [&](auto dist) {
            double fg = dist(f, g), gf = dist(g, f);
            CHECK(fg == gf);  // symmetric by construction
            double fh = dist(f, h), gh = dist(g, h);
            CHECK(fg <= fh + gh + 1e-7);
        };
        check_metric([](const Diffeo& a, const Diffeo& b) { return dist_ck(a, b, 1).total; });
        check_metric(
            [](const Diffeo& a, const Diffeo& b) { return dist_k_ac(a, b, 1).total; });
        check_metric(
            [](const Diffeo& a, const Diffeo& b) { return dist_1_bv(a, b).total; });
    }
}

TEST_CASE("variation ball membership") {
    Diffeo id = Diffeo::identity(Manifold::Interval, 1);
    BallMembership m1 = variation_ball_membership(id, 1);
    CHECK(m1.member);
    CHECK(m1.margin == doctest::Approx(1.0));

    Diffeo f = Diffeo::from_log_derivative(separated_family_member(1.0, 0.0, 10),
                                           Manifold::Interval, 0.0, 1);
    BallMembership m2 = variation_ball_membership(f, 1);
    CHECK(m2.member);
    CHECK(m2.margin == doctest::Approx(0.0).epsilon(1e-10));

    // closure under inversion: V(log (f^-1)') = V(log f'); compare away from
    // the exact ball boundary where rounding could flip membership
    BallMembership m2w = variation_ball_membership(f, 2);
    BallMembership m3 = variation_ball_membership(invert(f), 2);
    CHECK(m2w.member);
    CHECK(m3.member == m2w.member);
    CHECK(m3.margin == doctest::Approx(m2w.margin).epsilon(1e-6));

    CHECK_THROWS_AS(variation_ball_membership(id, 0), std::invalid_argument);
}

TEST_CASE("products land in the doubled variation ball") {
    Rng rng(79);
    for (int t = 0; t < 6; ++t) {
        Diffeo f = Diffeo::from_log_derivative(
            separated_family_member(0.4 + rng.uniform(), rng.uniform(-0.05, 0.05), 8),
            Manifold::Interval, 0.0, 1);
        Diffeo g = random_smooth(rng, Manifold::Interval, 1);
        double vf = regularity_check(f).log_derivative_variation;
        double vg = regularity_check(g).log_derivative_variation;
        double vfg = regularity_check(compose(f, g)).log_derivative_variation;
        CHECK(vfg <= vf + vg + 1e-7);
    }
}
