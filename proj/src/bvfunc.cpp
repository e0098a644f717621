#include "difflab/bvfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "difflab/quadrature.hpp"

namespace difflab {

double BVFunc::eval(double x) const {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("BVFunc::eval: point outside [0,1]");
    return eval_extended(x);
}

double BVFunc::eval_extended(double x) const {
    double v = ac_.eval(std::clamp(x, 0.0, 1.0));
    for (const auto& s : singular_) v += s.eval(x);
    return v;
}

std::pair<BVFunc, BVFunc> BVFunc::lebesgue_parts() const {
    return {BVFunc(ac_), BVFunc(PiecewisePolynomial(), singular_)};
}

DensityHandle BVFunc::derivative_ae() const {
    PiecewisePolynomial d = ac_.derivative();
    if (singular_.empty()) {
        std::vector<double> breaks = d.breakpoints();
        return {RealFunction([d](double x) { return d.eval(x); }, std::move(breaks)),
                true};
    }
    auto stairs = singular_;
    auto fn = [d, stairs](double x) {
        for (const auto& s : stairs)
            if (s.in_active_set(x)) return std::numeric_limits<double>::quiet_NaN();
        return d.eval(x);
    };
    return {RealFunction(std::move(fn), structural_breakpoints()), false};
}

std::vector<double> BVFunc::structural_breakpoints() const {
    std::vector<double> pts = ac_.breakpoints();
    // ac extremum locations, so grids and partitions resolve monotone runs
    PiecewisePolynomial d = ac_.derivative();
    for (std::size_t i = 0; i < d.pieces().size(); ++i) {
        double lo = d.breakpoints()[i], hi = d.breakpoints()[i + 1];
        for (double t : d.pieces()[i].sign_changes(0.0, hi - lo)) pts.push_back(lo + t);
    }
    for (const auto& s : singular_) s.append_edge_points(pts);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // keep only hints inside the domain
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [](double x) { return x < 0.0 || x > 1.0; }),
              pts.end());
    return pts;
}

RealFunction BVFunc::as_real_function() const {
    BVFunc copy = *this;
    return RealFunction([copy](double x) { return copy.eval_extended(x); },
                        structural_breakpoints());
}

bool BVFunc::structural_variation_available() const {
    if (singular_.empty()) return true;
    if (!ac_.is_constant(0.0)) return false;
    for (std::size_t i = 0; i < singular_.size(); ++i)
        for (std::size_t j = i + 1; j < singular_.size(); ++j)
            if (SingularStaircase::actives_overlap(singular_[i], singular_[j]))
                return false;
    return true;
}

double BVFunc::total_variation(Interval iv, double oracle_tol) const {
    if (singular_.empty()) return ac_.total_variation(iv.lo, iv.hi);
    if (structural_variation_available()) {
        double v = 0.0;
        for (const auto& s : singular_) v += s.variation_between(iv.lo, iv.hi);
        return v;
    }
    return total_variation_oracle(iv, oracle_tol).value;
}

VariationResult BVFunc::total_variation_oracle(Interval iv, double oracle_tol) const {
    return variation_oracle(as_real_function(), iv, oracle_tol);
}

double BVFunc::bv_norm(double oracle_tol) const {
    return std::abs(eval(0.0)) + total_variation(Interval::unit(), oracle_tol);
}

BVFunc BVFunc::scaled(double k) const {
    std::vector<SingularStaircase> stairs;
    if (k != 0.0) {
        stairs.reserve(singular_.size());
        for (const auto& s : singular_) stairs.push_back(s.scaled(k));
    }
    return {ac_.scaled(k), std::move(stairs)};
}

BVFunc BVFunc::translated(double h) const {
    if (!ac_.is_constant(0.0))
        throw std::invalid_argument("BVFunc::translated: only constant-ac functions");
    std::vector<SingularStaircase> stairs;
    stairs.reserve(singular_.size());
    for (const auto& s : singular_) stairs.push_back(s.translated(h));
    return {ac_, std::move(stairs)};
}

BVFunc linear_combine(const std::vector<double>& coeffs,
                      const std::vector<BVFunc>& funcs) {
    if (coeffs.empty() || coeffs.size() != funcs.size())
        throw std::invalid_argument("linear_combine: length mismatch");
    PiecewisePolynomial ac = funcs[0].ac().scaled(coeffs[0]);
    for (std::size_t i = 1; i < funcs.size(); ++i)
        ac = ac + funcs[i].ac().scaled(coeffs[i]);
    // re-stitch so the continuity invariant holds exactly
    ac = PiecewisePolynomial(ac.breakpoints(), ac.pieces());
    std::vector<SingularStaircase> stairs;
    for (std::size_t i = 0; i < funcs.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        for (const auto& s : funcs[i].singular()) stairs.push_back(s.scaled(coeffs[i]));
    }
    return {std::move(ac), std::move(stairs)};
}

BVFunc cantor(int depth) { return BVFunc(cantor_staircase(depth)); }

BVFunc separated_family_member(double r, double h, int depth) {
    if (!(r > 0.0)) throw std::invalid_argument("separated_family_member: r <= 0");
    if (!(std::abs(h) <= 1.0 / 6.0))
        throw std::invalid_argument("separated_family_member: |h| > 1/6");
    std::vector<SingularStaircase> stairs;
    stairs.emplace_back(depth, 1.0 / 6.0, 1.0 / 3.0, 0.5 * r, h);
    stairs.emplace_back(depth, 2.0 / 3.0, 5.0 / 6.0, -0.5 * r, h);
    return BVFunc(PiecewisePolynomial(), std::move(stairs));
}

double l1_norm(const DensityHandle& d, Interval iv, double abs_tol) {
    if (!d.everywhere_defined)
        throw std::invalid_argument("l1_norm: density undefined on singular active set");
    return integrate_abs(d.fn, iv.lo, iv.hi, abs_tol).value;
}

double l1_norm(const RealFunction& f, Interval iv, double abs_tol) {
    return integrate_abs(f, iv.lo, iv.hi, abs_tol).value;
}

double refine_sup(const std::function<double(double)>& f,
                  const std::vector<double>& seeds, Interval iv, double tol) {
    const double lo = iv.lo, hi = iv.hi;
    if (!(hi > lo)) return std::abs(f(lo));

    std::vector<double> pts;
    pts.push_back(lo);
    pts.push_back(hi);
    // decimate very long seed lists; the grid rounds recover the gaps
    std::size_t stride = seeds.size() > 8192 ? seeds.size() / 8192 + 1 : 1;
    for (std::size_t i = 0; i < seeds.size(); i += stride)
        if (seeds[i] > lo && seeds[i] < hi) pts.push_back(seeds[i]);
    const int grid = 512;
    for (int i = 1; i < grid; ++i)
        pts.push_back(lo + (hi - lo) * static_cast<double>(i) / grid);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    double best = 0.0, best_x = lo;
    for (double x : pts) {
        double v = std::abs(f(x));
        if (v > best) { best = v; best_x = x; }
    }

    // Global midpoint rounds until stable, then a local zoom at the argmax.
    for (int round = 0; round < 4; ++round) {
        double prev = best;
        std::vector<double> mids;
        mids.reserve(pts.size());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            mids.push_back(0.5 * (pts[i] + pts[i + 1]));
        for (double x : mids) {
            double v = std::abs(f(x));
            if (v > best) { best = v; best_x = x; }
        }
        std::vector<double> merged;
        merged.reserve(pts.size() + mids.size());
        std::merge(pts.begin(), pts.end(), mids.begin(), mids.end(),
                   std::back_inserter(merged));
        pts.swap(merged);
        if (best - prev < tol && round >= 1) break;
        if (pts.size() > (1u << 16)) break;
    }

    auto nb = std::lower_bound(pts.begin(), pts.end(), best_x);
    double wl = (nb == pts.begin()) ? lo : *(nb - 1);
    double wr = (nb + 1 == pts.end()) ? hi : *(nb + 1);
    double a = std::max(lo, wl), b = std::min(hi, wr);
    for (int it = 0; it < 90 && b - a > 1e-14; ++it) {
        double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        double v1 = std::abs(f(m1)), v2 = std::abs(f(m2));
        best = std::max({best, v1, v2});
        if (v1 < v2) a = m1; else b = m2;
    }
    return best;
}

double uniform_norm(const RealFunction& f, Interval iv) {
    return refine_sup(f.f, f.breakpoints, iv);
}

}  // namespace difflab
