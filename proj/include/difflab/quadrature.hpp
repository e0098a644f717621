#pragma once

#include <cstddef>

#include "difflab/real_function.hpp"

namespace difflab {

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
    std::size_t evaluations = 0;
};

/// Adaptive integration of f over [a,b] with per-interval error bounds
/// summing to at most abs_tol. The interval is split at f's structural
/// breakpoints before subdivision starts. Throws std::runtime_error if the
/// refinement depth limit is reached with the budget unmet.
QuadratureResult integrate(const RealFunction& f, double a, double b,
                           double abs_tol = 1e-9);

/// Same, integrating |f|.
QuadratureResult integrate_abs(const RealFunction& f, double a, double b,
                               double abs_tol = 1e-9);

}  // namespace difflab
