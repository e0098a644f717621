#pragma once

#include <string>
#include <utility>
#include <vector>

#include "difflab/diffeo.hpp"

namespace difflab {

/// A distance decomposed into its named nonnegative summands;
/// total is their sum by construction.
struct MetricValue {
    double total = 0.0;
    std::vector<std::pair<std::string, double>> summands;

    static MetricValue from_summands(std::vector<std::pair<std::string, double>> parts);
};

/// Distance on the manifold: |x-y| on I, chordal distance |e^{2 pi i x} - e^{2 pi i y}|
/// on the circle.
double manifold_distance(Manifold m, double x, double y);

/// sup_x d_M(f(x), g(x)) + sum_{i=1}^k ||f^(i) - g^(i)||_inf.
MetricValue dist_ck(const Diffeo& f, const Diffeo& g, int k);

/// dist_ck plus the L1 distance of the order-(k+1) densities. Requires both
/// arguments of class CkAC (throws std::invalid_argument on a BV-class
/// argument: the metric is outside its domain there).
MetricValue dist_k_ac(const Diffeo& f, const Diffeo& g, int k);

/// sup_x d_M(f(x), g(x)) + ||log f' - log g'||_BV.
MetricValue dist_1_bv(const Diffeo& f, const Diffeo& g);

struct BallMembership {
    bool member;
    double margin;  // n - V(log f')
};

/// Membership in A_n = { f : V(log f') <= n }.
BallMembership variation_ball_membership(const Diffeo& f, int n);

}  // namespace difflab
