#include "difflab/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "difflab/quadrature.hpp"
#include "difflab/variation.hpp"

namespace difflab {

MetricValue MetricValue::from_summands(
    std::vector<std::pair<std::string, double>> parts) {
    MetricValue mv;
    mv.summands = std::move(parts);
    for (const auto& [name, v] : mv.summands) {
        if (v < 0.0) throw std::logic_error("MetricValue: negative summand " + name);
        mv.total += v;
    }
    return mv;
}

double manifold_distance(Manifold m, double x, double y) {
    if (m == Manifold::Interval) return std::abs(x - y);
    return 2.0 * std::abs(std::sin(M_PI * (x - y)));
}

namespace {

void check_compatible(const Diffeo& f, const Diffeo& g, int k) {
    if (f.manifold() != g.manifold())
        throw std::invalid_argument("metric: manifold mismatch");
    if (k > f.order() || k > g.order())
        throw std::invalid_argument("metric: order exceeds available tower");
}

double sup_point_distance(const Diffeo& f, const Diffeo& g) {
    Manifold m = f.manifold();
    auto seeds = merge_breakpoints(f.structural_breakpoints(), g.structural_breakpoints());
    auto fn = [&f, &g, m](double x) { return manifold_distance(m, f.eval(x), g.eval(x)); };
    return refine_sup(fn, seeds, Interval::unit());
}

double sup_tower_distance(const Diffeo& f, const Diffeo& g, int j) {
    auto seeds = merge_breakpoints(f.structural_breakpoints(), g.structural_breakpoints());
    auto fn = [&f, &g, j](double x) { return f.derivative(x, j) - g.derivative(x, j); };
    return refine_sup(fn, seeds, Interval::unit());
}

}  // namespace

MetricValue dist_ck(const Diffeo& f, const Diffeo& g, int k) {
    check_compatible(f, g, k);
    std::vector<std::pair<std::string, double>> parts;
    parts.emplace_back("sup", sup_point_distance(f, g));
    for (int j = 1; j <= k; ++j)
        parts.emplace_back("C" + std::to_string(j), sup_tower_distance(f, g, j));
    return MetricValue::from_summands(std::move(parts));
}

MetricValue dist_k_ac(const Diffeo& f, const Diffeo& g, int k) {
    check_compatible(f, g, k);
    if (f.reg_class() == RegClass::CkBV || g.reg_class() == RegClass::CkBV)
        throw std::invalid_argument("dist_k_ac: BV-class argument outside the metric's domain");
    MetricValue base = dist_ck(f, g, k);
    auto seeds = merge_breakpoints(f.structural_breakpoints(), g.structural_breakpoints());
    RealFunction diff([&f, &g, k](double x) {
        return f.derivative(x, k + 1) - g.derivative(x, k + 1);
    }, seeds);
    double l1 = integrate_abs(diff, 0.0, 1.0, 1e-9).value;
    auto parts = base.summands;
    parts.emplace_back("L1", l1);
    return MetricValue::from_summands(std::move(parts));
}

MetricValue dist_1_bv(const Diffeo& f, const Diffeo& g) {
    check_compatible(f, g, 1);
    double bv;
    const BVFunc* lf = f.log_derivative_bv();
    const BVFunc* lg = g.log_derivative_bv();
    if (lf && lg) {
        bv = linear_combine({1.0, -1.0}, {*lf, *lg}).bv_norm();
    } else {
        RealFunction hf = f.log_derivative_handle();
        RealFunction hg = g.log_derivative_handle();
        RealFunction diff([hf, hg](double x) { return hf(x) - hg(x); },
                          merge_breakpoints(hf.breakpoints, hg.breakpoints));
        bv = bv_norm_of_handle(diff);
    }
    return MetricValue::from_summands(
        {{"sup", sup_point_distance(f, g)}, {"BV", bv}});
}

BallMembership variation_ball_membership(const Diffeo& f, int n) {
    if (n < 1) throw std::invalid_argument("variation_ball_membership: n must be >= 1");
    double v = regularity_check(f).log_derivative_variation;
    return {v <= static_cast<double>(n), static_cast<double>(n) - v};
}

}  // namespace difflab
