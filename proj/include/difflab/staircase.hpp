#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "difflab/interval.hpp"

namespace difflab {

/// Depth-truncated Cantor staircase, affinely mapped and translated:
///
///   S(x) = scale * C_depth((x + offset - a) / (b - a))
///
/// where C_depth is the classical Cantor function truncated at triadic depth
/// `depth` (piecewise linear, exact ramp slope (3/2)^depth on 2^depth rise
/// intervals of length 3^-depth each). S is constant left of a - offset and
/// right of b - offset, monotone in between, with total variation exactly
/// |scale| recorded structurally.
class SingularStaircase {
  public:
    enum class Base { Cantor };

    SingularStaircase(int depth, double a, double b, double scale, double offset,
                      Base base = Base::Cantor);

    double eval(double x) const;
    /// Derivative of the truncated object at x: ramp slope on a rise interval,
    /// 0 on plateaus. (The idealized a.e. derivative of the singular limit is
    /// 0 off the active set and undefined on it; see BVFunc::derivative_ae.)
    double ramp_derivative(double x) const;
    bool in_active_set(double x) const;

    /// Structural total variation over the whole line (= |scale|).
    double variation() const { return std::abs(scale_); }
    /// Variation over [x0, x1]; exact by monotonicity.
    double variation_between(double x0, double x1) const;

    /// Total length of the active (non-constant) set: (2/3)^depth * (b-a).
    double active_total_length() const;

    /// Visits the active (rise) intervals in increasing order, in x
    /// coordinates, without materializing all 2^depth of them at once.
    void for_each_active_interval(const std::function<void(double, double)>& fn) const;

    /// Appends both endpoints of every active interval to `out`.
    /// Throws for depth > 22 (4M+ intervals) to keep memory bounded.
    void append_edge_points(std::vector<double>& out) const;

    /// True if the active sets of the two staircases share a set of measure
    /// greater than tol_len. Exact merge walk over both interval streams;
    /// tol_len absorbs rounding of edge coordinates.
    static bool actives_overlap(const SingularStaircase& s1, const SingularStaircase& s2,
                                double tol_len = 0.0);

    int depth() const { return depth_; }
    double domain_lo() const { return a_; }
    double domain_hi() const { return b_; }
    double scale() const { return scale_; }
    double offset() const { return offset_; }
    Base base() const { return base_; }

    SingularStaircase scaled(double k) const {
        return {depth_, a_, b_, scale_ * k, offset_, base_};
    }
    SingularStaircase translated(double h) const {
        return {depth_, a_, b_, scale_, offset_ + h, base_};
    }

  private:
    Base base_;
    int depth_;
    double a_, b_, scale_, offset_;

    // Unit-coordinate Cantor truncation helpers (t in [0,1]).
    double unit_eval(double t) const;
    bool unit_in_active(double t, double* slope_scale) const;
};

/// Depth-truncated classical Cantor function on [0,1] (monotone 0 -> 1).
SingularStaircase cantor_staircase(int depth);

}  // namespace difflab
