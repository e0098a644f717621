#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace difflab {

/// Type-erased evaluable real function on (a subset of) [0,1] carrying its
/// structural breakpoints: points where smoothness or monotonicity may change.
/// Quadrature splits there first and the variation oracle seeds its
/// partitions with them.
struct RealFunction {
    std::function<double(double)> f;
    std::vector<double> breakpoints;  // sorted, may be empty

    double operator()(double x) const { return f(x); }

    RealFunction() = default;
    RealFunction(std::function<double(double)> fn, std::vector<double> breaks = {})
        : f(std::move(fn)), breakpoints(std::move(breaks)) {}
};

}  // namespace difflab
