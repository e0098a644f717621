#include "difflab/variation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace difflab {

namespace {

struct Segment {
    double a, b;
    double va, vb;
    int calm;  // consecutive refinements that gained nothing
};

}  // namespace

VariationResult variation_oracle(const RealFunction& f, Interval iv, double tol,
                                 int max_rounds) {
    if (!(tol > 0.0)) throw std::invalid_argument("variation_oracle: tol must be > 0");
    const double lo = iv.lo, hi = iv.hi;
    VariationResult res;
    if (!(hi > lo)) {
        res.converged = true;
        return res;
    }

    std::vector<double> pts;
    pts.push_back(lo);
    for (double x : f.breakpoints) {
        if (!(x > lo && x < hi)) continue;
        // sample the one-sided neighborhoods too, so jumps located exactly at
        // a breakpoint are resolved instead of being chased by bisection
        pts.push_back(std::nextafter(x, lo));
        pts.push_back(x);
        pts.push_back(std::nextafter(x, hi));
    }
    const int base_grid = 128;
    for (int i = 1; i < base_grid; ++i)
        pts.push_back(lo + (hi - lo) * static_cast<double>(i) / base_grid);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    double settled_sum = 0.0;   // |increments| of segments no longer refined
    double active_sum = 0.0;    // |increments| of segments still being split
    std::deque<Segment> active;
    {
        double prev_x = pts[0], prev_v = f(pts[0]);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            double v = f(pts[i]);
            active.push_back({prev_x, pts[i], prev_v, v, 0});
            active_sum += std::abs(v - prev_v);
            prev_x = pts[i];
            prev_v = v;
        }
    }
    res.lower_bounds.push_back(settled_sum + active_sum);

    const std::size_t max_segments = 1u << 24;
    const int calm_required = 2;
    for (int round = 0; round < max_rounds; ++round) {
        if (active.empty()) {
            res.converged = true;
            res.value = settled_sum + active_sum;
            return res;
        }
        double round_gain = 0.0;
        std::deque<Segment> next;
        for (const Segment& s : active) {
            double m = 0.5 * (s.a + s.b);
            if (!(m > s.a && m < s.b)) {  // width at the floating point floor
                settled_sum += std::abs(s.vb - s.va);
                active_sum -= std::abs(s.vb - s.va);
                continue;
            }
            double vm = f(m);
            double before = std::abs(s.vb - s.va);
            double after = std::abs(vm - s.va) + std::abs(s.vb - vm);
            double gain = after - before;
            round_gain += gain;
            active_sum += gain;
            double calm_floor =
                std::max(tol * (s.b - s.a) / (hi - lo),
                         1e-15 * (std::abs(s.va) + std::abs(s.vb) + std::abs(vm)));
            int calm = gain <= calm_floor ? s.calm + 1 : 0;
            Segment left{s.a, m, s.va, vm, calm};
            Segment right{m, s.b, vm, s.vb, calm};
            for (const Segment& child : {left, right}) {
                if (calm >= calm_required) {
                    settled_sum += std::abs(child.vb - child.va);
                    active_sum -= std::abs(child.vb - child.va);
                } else {
                    next.push_back(child);
                }
            }
        }
        active.swap(next);
        res.lower_bounds.push_back(settled_sum + active_sum);
        if (round_gain < tol && round >= 1) {
            res.converged = true;
            res.value = res.lower_bounds.back();
            return res;
        }
        if (active.size() > max_segments) break;
    }
    res.value = res.lower_bounds.back();
    if (active.empty()) {
        res.converged = true;
        return res;
    }
    throw std::runtime_error("variation_oracle: did not converge within budget");
}

}  // namespace difflab
