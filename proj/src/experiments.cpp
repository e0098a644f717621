#include "difflab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "difflab/metrics.hpp"
#include "difflab/quadrature.hpp"
#include "difflab/rng.hpp"
#include "difflab/variation.hpp"

namespace difflab {

namespace {

std::string manifold_name(Manifold m) {
    return m == Manifold::Interval ? "interval" : "circle";
}

bool chain_decreasing(double v1, double v2, double v3) {
    const double slack = 1e-12;
    return v2 <= v1 + slack && v3 <= v2 + slack && v3 <= v1 + slack;
}

}  // namespace

ExperimentReport run_separated_family(const SeparatedFamilyParams& p) {
    if (p.num_h < 1) throw std::invalid_argument("separated_family: num_h < 1");
    if (!(p.r > 0.0)) throw std::invalid_argument("separated_family: r <= 0");
    const double sep = 10.0 * std::pow(3.0, -p.depth);

    Rng rng(p.seed);
    std::vector<double> hs;
    int attempts = 0;
    while (static_cast<int>(hs.size()) < p.num_h) {
        if (++attempts > 100000)
            throw std::runtime_error(
                "separated_family: separation unattainable for requested num_h "
                "(reduce num_h or raise depth)");
        double h = rng.uniform(-1.0 / 6.0, 1.0 / 6.0);
        bool ok = true;
        for (double x : hs)
            if (std::abs(x - h) <= sep) { ok = false; break; }
        if (ok) hs.push_back(h);
    }
    std::sort(hs.begin(), hs.end());

    ExperimentReport rep;
    rep.name = "separated-family";
    rep.add_param("r", p.r);
    rep.add_param("num_h", static_cast<std::int64_t>(p.num_h));
    rep.add_param("depth", static_cast<std::int64_t>(p.depth));
    rep.add_param("seed", static_cast<std::int64_t>(p.seed));
    rep.add_param("pair_tol", p.pair_tol);
    rep.add_param("single_tol", p.single_tol);
    rep.columns = {"kind", "h1", "h2", "bv_norm", "target"};

    std::vector<BVFunc> family;
    family.reserve(hs.size());
    for (double h : hs) family.push_back(separated_family_member(p.r, h, p.depth));

    for (std::size_t i = 0; i < family.size(); ++i) {
        double v = family[i].bv_norm(1e-9);
        rep.add_row({0.0, hs[i], hs[i], v, p.r}, std::abs(v - p.r) < p.single_tol);
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            BVFunc diff = linear_combine({1.0, -1.0}, {family[i], family[j]});
            double v = diff.bv_norm(1e-9);
            rep.add_row({1.0, hs[i], hs[j], v, 2.0 * p.r},
                        std::abs(v - 2.0 * p.r) < p.pair_tol);
        }
    }
    return rep;
}

ExperimentReport run_translate_doubling(const TranslateDoublingParams& p) {
    if (p.num_h < 1) throw std::invalid_argument("translate_doubling: num_h < 1");
    const double lo = 0.25, hi = 0.75;
    const double cell = std::pow(3.0, -p.depth) * (hi - lo);
    const double min_h = 10.0 * std::pow(3.0, -p.depth);

    SingularStaircase base(p.depth, lo, hi, 1.0, 0.0);
    BVFunc g(base);
    const double two_v = 2.0 * g.total_variation();

    // Exactly misaligned translates: odd multiples of the depth cell. At
    // finite depth the doubling identity is exact precisely when the ramp
    // sets of g and its translate are disjoint, and the disjoint offsets are
    // the odd lattice points; a continuous draw would land in an overlap
    // window almost surely. Each draw is certified disjoint structurally.
    std::uint64_t kmin = static_cast<std::uint64_t>(min_h / (2.0 * cell)) + 1;
    std::uint64_t kmax = static_cast<std::uint64_t>(0.2 / (2.0 * cell));
    if (kmax <= kmin)
        throw std::invalid_argument("translate_doubling: depth too small for the lattice");

    ExperimentReport rep;
    rep.name = "translate-doubling";
    rep.add_param("depth", static_cast<std::int64_t>(p.depth));
    rep.add_param("num_h", static_cast<std::int64_t>(p.num_h));
    rep.add_param("seed", static_cast<std::int64_t>(p.seed));
    rep.add_param("tol", p.tol);
    rep.columns = {"h", "variation", "ratio"};

    for (int i = 0; i < p.num_h; ++i) {
        Rng rng = Rng::substream(p.seed, static_cast<std::uint64_t>(i));
        bool placed = false;
        for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
            std::uint64_t k = kmin + rng.uniform_int(kmax - kmin);
            double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
            double h = sign * (2.0 * static_cast<double>(k) + 1.0) * cell;
            if (!(std::abs(h) > min_h)) continue;
            SingularStaircase shifted = base.translated(h);
            if (SingularStaircase::actives_overlap(base, shifted, 1e-13)) continue;
            BVFunc diff = linear_combine({1.0, -1.0}, {BVFunc(shifted), g});
            double v = diff.total_variation_oracle(Interval::unit(), 1e-9).value;
            double ratio = v / two_v;
            rep.add_row({h, v, ratio}, std::abs(ratio - 1.0) < p.tol);
            placed = true;
        }
        if (!placed)
            throw std::runtime_error("translate_doubling: misalignment resampling exhausted");
    }
    return rep;
}

ExperimentReport run_bv_discontinuity(const BvDiscontinuityParams& p) {
    if (p.n_lo > p.n_hi) throw std::invalid_argument("bv_discontinuity: empty n range");
    const double min_h = std::pow(2.0, -p.n_hi);
    if (!(min_h > 10.0 * std::pow(3.0, -p.depth)))
        throw std::invalid_argument("bv_discontinuity: misalignment precondition violated");

    BVFunc gamma = separated_family_member(1.0, 0.0, p.depth);
    Diffeo g = Diffeo::from_log_derivative(gamma, p.manifold, 0.0, 1);
    const double delta = 1.0 / 6.0;
    const double eps = gamma.total_variation(Interval(delta, 1.0 - delta));
    Diffeo e = Diffeo::identity(p.manifold, 1);
    RealFunction log_gp = g.log_derivative_handle();

    ExperimentReport rep;
    rep.name = "bv-discontinuity";
    rep.add_param("depth", static_cast<std::int64_t>(p.depth));
    rep.add_param("n_lo", static_cast<std::int64_t>(p.n_lo));
    rep.add_param("n_hi", static_cast<std::int64_t>(p.n_hi));
    rep.add_param("manifold", manifold_name(p.manifold));
    rep.add_param("seed", static_cast<std::int64_t>(p.seed));
    rep.add_param("epsilon", eps);
    rep.columns = {"n", "h", "dist_to_identity", "log_fn_prime_bv", "bv_gap"};

    double prev = std::numeric_limits<double>::infinity();
    bool decreasing = true;
    double last = prev;
    for (int n = p.n_lo; n <= p.n_hi; ++n) {
        double h = std::pow(2.0, -n);
        Diffeo fn = p.manifold == Manifold::Circle ? Diffeo::rotation(h)
                                                   : Diffeo::ramp_shift(h);
        MetricValue d = dist_1_bv(fn, e);
        double log_fn_bv =
            fn.is_affine() ? 0.0 : bv_norm_of_handle(fn.log_derivative_handle());
        Diffeo gf = compose(g, fn);
        RealFunction log_gfp = gf.log_derivative_handle();
        RealFunction gap_fn(
            [log_gfp, log_gp](double x) { return log_gfp(x) - log_gp(x); },
            merge_breakpoints(log_gfp.breakpoints, log_gp.breakpoints));
        double gap = bv_norm_of_handle(gap_fn, 1e-9);
        rep.add_row({static_cast<double>(n), h, d.total, log_fn_bv, gap}, gap >= eps);
        if (!(d.total < prev)) decreasing = false;
        prev = d.total;
        last = d.total;
    }
    if (!decreasing || !(last < p.final_sup_bound)) rep.pass = false;
    return rep;
}

ExperimentReport run_ac_continuity(const AcContinuityParams& p) {
    if (p.k < 1) throw std::invalid_argument("ac_continuity: k must be >= 1");
    if (p.n_max < 1) throw std::invalid_argument("ac_continuity: n_max must be >= 1");

    Rng rng(p.seed);
    // fixed smooth base, seed-scaled bump perturbation x^2 (1-x)^2
    PiecewisePolynomial base =
        PiecewisePolynomial::from_global(Polynomial({0.0, 0.7, -0.5}));
    double c = (1.0 / 512.0) * (0.75 + 0.5 * rng.uniform());
    Polynomial bump({0.0, 0.0, c, -2.0 * c, c});
    Diffeo f0 = Diffeo::from_log_derivative(BVFunc(base), Manifold::Interval, 0.0, p.k);
    Diffeo gfix = Diffeo::from_log_derivative(
        BVFunc(PiecewisePolynomial::from_global(Polynomial({0.0, -0.4, 0.3}))),
        Manifold::Interval, 0.0, p.k);
    Diffeo f0_inv = invert(f0);
    Diffeo f0_comp = compose(f0, gfix);

    ExperimentReport rep;
    rep.name = "ac-continuity";
    rep.add_param("k", static_cast<std::int64_t>(p.k));
    rep.add_param("n_max", static_cast<std::int64_t>(p.n_max));
    rep.add_param("seed", static_cast<std::int64_t>(p.seed));
    rep.add_param("bump_scale", c);
    rep.columns = {"n", "d_self", "d_inverse", "d_compose"};

    for (int n = 1; n <= p.n_max; n *= 2) {
        PiecewisePolynomial gn =
            base + PiecewisePolynomial::from_global(bump.scaled(1.0 / n));
        gn = PiecewisePolynomial(gn.breakpoints(), gn.pieces());
        Diffeo fn = Diffeo::from_log_derivative(BVFunc(gn), Manifold::Interval, 0.0, p.k);
        double d_self = dist_k_ac(fn, f0, p.k).total;
        double d_inv = dist_k_ac(invert(fn), f0_inv, p.k).total;
        double d_comp = dist_k_ac(compose(fn, gfix), f0_comp, p.k).total;
        bool ok = d_inv <= 10.0 * d_self + 1e-6 && d_comp <= 10.0 * d_self + 1e-6;
        rep.add_row({static_cast<double>(n), d_self, d_inv, d_comp}, ok);
    }
    return rep;
}

namespace {

PiecewisePolynomial random_density(Rng& rng) {
    int np = 1 + static_cast<int>(rng.uniform_int(3));
    std::vector<double> breaks{0.0};
    for (int i = 1; i < np; ++i) breaks.push_back(rng.uniform(0.1, 0.9));
    breaks.push_back(1.0);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<Polynomial> pieces;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        std::vector<double> cs(4);
        for (double& v : cs) v = rng.uniform(-2.0, 2.0);
        pieces.emplace_back(std::move(cs));
    }
    // integrable, deliberately discontinuous across pieces
    return PiecewisePolynomial(std::move(breaks), std::move(pieces), /*stitch=*/false);
}

PiecewisePolynomial random_continuous(Rng& rng) {
    PiecewisePolynomial raw = random_density(rng);
    return PiecewisePolynomial(raw.breakpoints(), raw.pieces());  // stitched
}

Diffeo random_c1_diffeo(Rng& rng, Manifold m, int k = 1) {
    double a1 = rng.uniform(-1.0, 1.0), a2 = rng.uniform(-0.8, 0.8);
    if (m == Manifold::Circle) {
        // G(0) = G(1) = 0 keeps the lift C^1 across the seam
        Polynomial gp = Polynomial({0.0, a1, -a1}) + Polynomial({0.0, 0.0, a2, -2.0 * a2, a2});
        double offset = rng.uniform();
        return Diffeo::from_log_derivative(
            BVFunc(PiecewisePolynomial::from_global(gp)), m, offset, k);
    }
    Polynomial gp({0.0, a1, a2});
    return Diffeo::from_log_derivative(BVFunc(PiecewisePolynomial::from_global(gp)), m,
                                       0.0, k);
}

RealFunction substitution_handle(const PiecewisePolynomial& g, const Diffeo& u) {
    std::vector<double> breaks = u.structural_breakpoints();
    for (double b : g.breakpoints()) {
        double x = u.inverse_lift(b);
        x -= std::floor(x);
        if (x >= 0.0 && x <= 1.0) breaks.push_back(x);
    }
    if (u.manifold() == Manifold::Circle) {
        double q = u.inverse_lift(1.0);
        q -= std::floor(q);
        if (q > 0.0 && q < 1.0) breaks.push_back(q);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    PiecewisePolynomial gc = g;
    Diffeo uc = u;
    return RealFunction(
        [gc, uc](double x) { return gc.eval(uc.eval(x)) * uc.derivative(x, 1); },
        std::move(breaks));
}

}  // namespace

ExperimentReport run_change_of_variables(const ChangeOfVariablesParams& p) {
    if (p.trials < 1) throw std::invalid_argument("change_of_variables: trials < 1");

    ExperimentReport rep;
    rep.name = "change-of-variables";
    rep.add_param("trials", static_cast<std::int64_t>(p.trials));
    rep.add_param("seed", static_cast<std::int64_t>(p.seed));
    rep.add_param("tol", p.tol);
    rep.columns = {"trial",   "manifold", "residual", "subst_l1_1", "subst_l1_2",
                   "subst_l1_4", "prod_l1_1", "prod_l1_2", "prod_l1_4"};

    for (int mi = 0; mi < 2; ++mi) {
        Manifold m = mi == 0 ? Manifold::Interval : Manifold::Circle;
        for (int t = 0; t < p.trials; ++t) {
            Rng rng = Rng::substream(p.seed,
                                     static_cast<std::uint64_t>(mi * p.trials + t));
            PiecewisePolynomial g = random_density(rng);
            Diffeo u = random_c1_diffeo(rng, m);

            double exact = g.integrate(0.0, 1.0);
            double numeric = integrate(substitution_handle(g, u), 0.0, 1.0, 1e-9).value;
            double residual = std::abs(exact - numeric);

            // continuity of v -> (g o v) v' in L1 along v_j -> u
            double a1 = rng.uniform(-0.5, 0.5);
            Polynomial wiggle({0.0, a1, -a1});  // vanishes at both endpoints
            const BVFunc* src = u.source_log_derivative();
            double subst[3];
            for (int j = 0; j < 3; ++j) {
                double scale = 0.25 / static_cast<double>(1 << j);
                PiecewisePolynomial gu =
                    src->ac() + PiecewisePolynomial::from_global(wiggle.scaled(scale));
                gu = PiecewisePolynomial(gu.breakpoints(), gu.pieces());
                Diffeo v = Diffeo::from_log_derivative(BVFunc(gu), m,
                                                       u.rotation_offset(), 1);
                RealFunction hu = substitution_handle(g, u);
                RealFunction hv = substitution_handle(g, v);
                RealFunction diff(
                    [hu, hv](double x) { return hu(x) - hv(x); },
                    merge_breakpoints(hu.breakpoints, hv.breakpoints));
                subst[j] = integrate_abs(diff, 0.0, 1.0, 1e-9).value;
            }

            // continuity of (f, a) -> f * a, L1 x C -> L1, via exact pp algebra
            PiecewisePolynomial a = random_continuous(rng);
            PiecewisePolynomial rho = random_density(rng);
            PiecewisePolynomial sig = random_continuous(rng);
            PiecewisePolynomial ga = g * a;
            double prod[3];
            for (int j = 0; j < 3; ++j) {
                double scale = 1.0 / static_cast<double>(1 << j);
                PiecewisePolynomial gm = g + rho.scaled(0.2 * scale);
                PiecewisePolynomial bm = a + sig.scaled(0.2 * scale);
                prod[j] = ((gm * bm) - ga).integrate_abs(0.0, 1.0);
            }

            bool ok = residual < p.tol && chain_decreasing(subst[0], subst[1], subst[2]) &&
                      chain_decreasing(prod[0], prod[1], prod[2]);
            rep.add_row({static_cast<double>(t), static_cast<double>(mi), residual,
                         subst[0], subst[1], subst[2], prod[0], prod[1], prod[2]},
                        ok);
        }
    }
    return rep;
}

namespace {

BVFunc random_bvfunc(Rng& rng, bool allow_singular) {
    PiecewisePolynomial ac = random_continuous(rng);
    std::vector<SingularStaircase> stairs;
    if (allow_singular && rng.uniform() < 0.6) {
        int count = 1 + static_cast<int>(rng.uniform_int(2));
        for (int i = 0; i < count; ++i) {
            int depth = 4 + static_cast<int>(rng.uniform_int(5));
            double a = rng.uniform(0.05, 0.55);
            double b = a + rng.uniform(0.1, 0.35);
            double scale = rng.uniform(0.2, 1.2) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
            double offset = rng.uniform(-0.04, 0.04);
            if (a - offset < 0.01 || b - offset > 0.99) offset = 0.0;
            stairs.emplace_back(depth, a, b, scale, offset);
        }
    }
    return {std::move(ac), std::move(stairs)};
}

}  // namespace

ExperimentReport run_variation_invariance(const VariationInvarianceParams& p) {
    if (p.trials < 1) throw std::invalid_argument("variation_invariance: trials < 1");

    ExperimentReport rep;
    rep.name = "variation-invariance";
    rep.add_param("trials", static_cast<std::int64_t>(p.trials));
    rep.add_param("seed", static_cast<std::int64_t>(p.seed));
    rep.add_param("tol", p.tol);
    rep.columns = {"trial", "kind", "residual", "oracle_monotone"};

    for (int t = 0; t < p.trials; ++t) {
        Rng rng = Rng::substream(p.seed, static_cast<std::uint64_t>(t));
        BVFunc F = random_bvfunc(rng, true);
        int kind = t % 4;
        double residual = 0.0;

        if (kind == 0) {
            Manifold m = (t / 4) % 2 == 0 ? Manifold::Interval : Manifold::Circle;
            if (m == Manifold::Circle) {
                // circle composition wraps at the seam; make F(0) = F(1) so the
                // wrapped representative has no artificial jump
                double slope = F.eval(1.0) - F.eval(0.0);
                F = linear_combine({1.0, 1.0},
                                   {F, BVFunc(PiecewisePolynomial::from_global(
                                          Polynomial({0.0, -slope})))});
            }
            Diffeo u = random_c1_diffeo(rng, m);
            double left = variation_oracle(compose_with(F, u), Interval::unit(), 1e-9).value;
            double right = F.total_variation(Interval::unit(), 1e-9);
            residual = std::abs(left - right);
        } else if (kind == 1) {
            double c = rng.uniform(0.0, 0.3);
            double d = rng.uniform(0.7, 1.0);
            double e = rng.uniform(c + 0.05, d - 0.05);
            residual = std::abs(F.total_variation(Interval(c, e), 1e-9) +
                                F.total_variation(Interval(e, d), 1e-9) -
                                F.total_variation(Interval(c, d), 1e-9));
        } else if (kind == 2) {
            double k = rng.uniform(-3.0, 3.0);
            residual = std::abs(F.scaled(k).total_variation(Interval::unit(), 1e-9) -
                                std::abs(k) * F.total_variation(Interval::unit(), 1e-9));
        } else {
            double k = rng.uniform(-2.0, 2.0);
            BVFunc shifted = linear_combine(
                {1.0, 1.0}, {F, BVFunc(PiecewisePolynomial::constant(k))});
            residual = std::abs(shifted.total_variation(Interval::unit(), 1e-9) -
                                F.total_variation(Interval::unit(), 1e-9));
        }

        VariationResult vr = F.total_variation_oracle(Interval::unit(), 1e-9);
        bool monotone = true;
        for (std::size_t i = 1; i < vr.lower_bounds.size(); ++i)
            if (vr.lower_bounds[i] < vr.lower_bounds[i - 1] - 1e-9) monotone = false;
        bool ok = residual < p.tol && monotone;
        rep.add_row({static_cast<double>(t), static_cast<double>(kind), residual,
                     monotone ? 1.0 : 0.0},
                    ok);
    }
    return rep;
}

}  // namespace difflab
