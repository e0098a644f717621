#pragma once

#include <vector>

namespace difflab {

/// Truncated Taylor series (jet) utilities. A jet is the coefficient vector
/// a[0..n] of f(x0 + t) = sum a_k t^k; derivatives are a_k * k!.
/// Composition, exponential and functional inversion of jets realize the
/// chain, product and inverse rules recursively to machine precision.
using Jet = std::vector<double>;

Jet jet_mul(const Jet& a, const Jet& b, int order);
/// Composition (outer o inner): outer expanded at inner[0].
Jet jet_compose(const Jet& outer, const Jet& inner, int order);
Jet jet_exp(const Jet& a, int order);
/// Jet of the inverse function at f(x0); requires a[1] != 0.
Jet jet_inverse(const Jet& a, int order);

double factorial(int n);
Jet jet_from_derivatives(const std::vector<double>& derivs);
std::vector<double> derivatives_from_jet(const Jet& jet);

}  // namespace difflab
