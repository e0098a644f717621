#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace difflab {

/// Closed subinterval [lo, hi] of the unit interval.
struct Interval {
    double lo{0.0};
    double hi{1.0};

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi");
    }

    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }

    static Interval unit() { return {0.0, 1.0}; }
};

/// Finite union of pairwise disjoint intervals, kept sorted by lo.
class IntervalUnion {
  public:
    IntervalUnion() = default;

    explicit IntervalUnion(std::vector<Interval> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        for (std::size_t i = 1; i < parts_.size(); ++i) {
            if (parts_[i].lo < parts_[i - 1].hi)
                throw std::invalid_argument("IntervalUnion: components overlap");
        }
    }

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    double total_length() const {
        double s = 0.0;
        for (const auto& p : parts_) s += p.length();
        return s;
    }

  private:
    std::vector<Interval> parts_;
};

/// Library-wide default tolerance for numeric assertions. Overridable via
/// the DIFFLAB_TOL environment variable (read once per process).
double default_tolerance();

}  // namespace difflab
