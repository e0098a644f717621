#include "difflab/staircase.hpp"

#include <cmath>
#include <stdexcept>

namespace difflab {

SingularStaircase::SingularStaircase(int depth, double a, double b, double scale,
                                     double offset, Base base)
    : base_(base), depth_(depth), a_(a), b_(b), scale_(scale), offset_(offset) {
    if (depth < 1) throw std::invalid_argument("SingularStaircase: depth must be >= 1");
    if (!(a < b)) throw std::invalid_argument("SingularStaircase: need a < b");
}

double SingularStaircase::unit_eval(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double value = 0.0, scale = 1.0;
    for (int i = 0; i < depth_; ++i) {
        t *= 3.0;
        if (t < 1.0) {
            scale *= 0.5;
        } else if (t <= 2.0) {
            return value + 0.5 * scale;  // middle-third plateau
        } else {
            value += 0.5 * scale;
            scale *= 0.5;
            t -= 2.0;
        }
    }
    return value + scale * t;  // linear ramp across the depth cell
}

bool SingularStaircase::unit_in_active(double t, double* slope_scale) const {
    if (t <= 0.0 || t >= 1.0) return false;
    for (int i = 0; i < depth_; ++i) {
        t *= 3.0;
        if (t < 1.0) {
            // keep descending
        } else if (t <= 2.0) {
            return false;
        } else {
            t -= 2.0;
        }
    }
    if (slope_scale) *slope_scale = std::pow(1.5, depth_);
    return true;
}

double SingularStaircase::eval(double x) const {
    double t = (x + offset_ - a_) / (b_ - a_);
    return scale_ * unit_eval(t);
}

double SingularStaircase::ramp_derivative(double x) const {
    double t = (x + offset_ - a_) / (b_ - a_);
    double slope = 0.0;
    if (!unit_in_active(t, &slope)) return 0.0;
    return scale_ * slope / (b_ - a_);
}

bool SingularStaircase::in_active_set(double x) const {
    double t = (x + offset_ - a_) / (b_ - a_);
    return unit_in_active(t, nullptr);
}

double SingularStaircase::variation_between(double x0, double x1) const {
    return std::abs(eval(x1) - eval(x0));
}

double SingularStaircase::active_total_length() const {
    return std::pow(2.0 / 3.0, depth_) * (b_ - a_);
}

void SingularStaircase::for_each_active_interval(
    const std::function<void(double, double)>& fn) const {
    // Iterative descent over kept triadic cells, leftmost first.
    // A cell is (left in units of 3^-level, level); level == depth_ is a rise.
    struct Node {
        double left;
        int level;
    };
    std::vector<Node> stack;
    stack.push_back({0.0, 0});
    const double width = b_ - a_;
    while (!stack.empty()) {
        Node n = stack.back();
        stack.pop_back();
        double cell = std::pow(3.0, -n.level);
        if (n.level == depth_) {
            double lo = a_ - offset_ + n.left * width;
            double hi = lo + cell * width;
            fn(lo, hi);
            continue;
        }
        // push right child first so the left one is processed first
        stack.push_back({n.left + 2.0 * cell / 3.0, n.level + 1});
        stack.push_back({n.left, n.level + 1});
    }
}

void SingularStaircase::append_edge_points(std::vector<double>& out) const {
    if (depth_ > 22)
        throw std::runtime_error("SingularStaircase: edge enumeration beyond depth 22");
    out.reserve(out.size() + (std::size_t{2} << depth_));
    for_each_active_interval([&out](double lo, double hi) {
        out.push_back(lo);
        out.push_back(hi);
    });
}

namespace {

// Stack-based cursor over a staircase's active intervals, ascending.
class ActiveCursor {
  public:
    explicit ActiveCursor(const SingularStaircase& s) : s_(s) {
        stack_.push_back({0.0, 0});
        advance();
    }
    bool done() const { return done_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    void next() { advance(); }

  private:
    struct Node {
        double left;
        int level;
    };
    const SingularStaircase& s_;
    std::vector<Node> stack_;
    bool done_ = false;
    double lo_ = 0.0, hi_ = 0.0;

    void advance() {
        const double width = s_.domain_hi() - s_.domain_lo();
        while (!stack_.empty()) {
            Node n = stack_.back();
            stack_.pop_back();
            double cell = std::pow(3.0, -n.level);
            if (n.level == s_.depth()) {
                lo_ = s_.domain_lo() - s_.offset() + n.left * width;
                hi_ = lo_ + cell * width;
                return;
            }
            stack_.push_back({n.left + 2.0 * cell / 3.0, n.level + 1});
            stack_.push_back({n.left, n.level + 1});
        }
        done_ = true;
    }
};

}  // namespace

bool SingularStaircase::actives_overlap(const SingularStaircase& s1,
                                        const SingularStaircase& s2, double tol_len) {
    ActiveCursor c1(s1), c2(s2);
    while (!c1.done() && !c2.done()) {
        if (c1.hi() - c2.lo() <= tol_len) {
            c1.next();
        } else if (c2.hi() - c1.lo() <= tol_len) {
            c2.next();
        } else {
            return true;  // interiors intersect beyond the tolerance
        }
    }
    return false;
}

SingularStaircase cantor_staircase(int depth) {
    return SingularStaircase(depth, 0.0, 1.0, 1.0, 0.0);
}

}  // namespace difflab
