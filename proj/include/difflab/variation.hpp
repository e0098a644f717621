#pragma once

#include <vector>

#include "difflab/interval.hpp"
#include "difflab/real_function.hpp"

namespace difflab {

struct VariationResult {
    double value = 0.0;
    /// Partition sums over the nested refinement rounds; nondecreasing.
    std::vector<double> lower_bounds;
    bool converged = false;
};

/// Brute-force total variation estimator: evaluates sum |f(x_i) - f(x_{i-1})|
/// over nested partitions of [iv.lo, iv.hi]. Round 0 uses the endpoints, all
/// structural breakpoints of f inside the interval, and a uniform dyadic
/// grid; each later round inserts every midpoint. Refinement never decreases
/// the sum, so the rounds form a monotone lower-bound sequence; it stops once
/// a round gains less than tol. Throws std::runtime_error when the point
/// budget is exhausted with the increment still >= tol.
VariationResult variation_oracle(const RealFunction& f, Interval iv, double tol,
                                 int max_rounds = 16);

}  // namespace difflab
