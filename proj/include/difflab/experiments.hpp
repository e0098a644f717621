#pragma once

#include <cstdint>

#include "difflab/diffeo.hpp"
#include "difflab/report.hpp"

namespace difflab {

/// Pairwise BV distances in the separated family {F_h}. Samples num_h offsets
/// uniformly from [-1/6, 1/6], resampling until pairwise separation exceeds
/// 10 * 3^-depth. Emits one row per member (target r) and one per pair
/// (target 2r). Throws std::runtime_error when separation is unattainable.
struct SeparatedFamilyParams {
    double r = 1.0;
    int num_h = 8;
    int depth = 16;
    std::uint64_t seed = 1;
    double pair_tol = 1e-6;
    double single_tol = 1e-9;
};
ExperimentReport run_separated_family(const SeparatedFamilyParams& p);

/// Variation doubling under translation for the truncated Cantor staircase
/// (supported on [1/4, 3/4] so every translate stays inside [0,1]). Offsets
/// are drawn from the exact-misalignment lattice (odd multiples of the depth
/// cell) and certified disjoint; see the experiment notes in the README.
struct TranslateDoublingParams {
    int depth = 16;
    int num_h = 20;
    std::uint64_t seed = 1;
    double tol = 1e-6;
};
ExperimentReport run_translate_doubling(const TranslateDoublingParams& p);

/// Left-multiplication discontinuity under the BV metric: g has a singular
/// log-derivative of variation 1 and f_n -> identity, yet the BV gap
/// ||log(g o f_n)' - log g'||_BV stays >= epsilon = V over [1/6, 5/6] of the
/// singular part. Circle uses rotations; interval uses ramp shifts
/// (requires h_n < 1/36, i.e. n_lo >= 6).
struct BvDiscontinuityParams {
    int depth = 12;
    int n_lo = 3;
    int n_hi = 12;
    Manifold manifold = Manifold::Circle;
    std::uint64_t seed = 1;
    double final_sup_bound = 0.05;
};
ExperimentReport run_bv_discontinuity(const BvDiscontinuityParams& p);

/// Continuity of the group operations in the k+AC metric along
/// f_n = from_log_derivative(G + p/n): d(f_n, f_0), d(f_n^-1, f_0^-1) and
/// d(f_n o g, f_0 o g) for n = 1, 2, 4, ..., n_max.
struct AcContinuityParams {
    int k = 1;
    int n_max = 64;
    std::uint64_t seed = 1;
};
ExperimentReport run_ac_continuity(const AcContinuityParams& p);

/// Substitution identity int g = int (g o u) u' for random integrable
/// piecewise polynomials g and random C^1 diffeomorphisms u on both
/// manifolds, plus L1-continuity rows for u -> (g o u) u' and for pointwise
/// multiplication.
struct ChangeOfVariablesParams {
    int trials = 100;  // per manifold
    std::uint64_t seed = 1;
    double tol = 1e-7;
};
ExperimentReport run_change_of_variables(const ChangeOfVariablesParams& p);

/// Randomized variation-calculus properties: composition invariance,
/// additivity at a split point, scaling, constant shift; plus monotonicity of
/// the oracle's lower-bound sequence.
struct VariationInvarianceParams {
    int trials = 200;
    std::uint64_t seed = 1;
    double tol = 1e-7;
};
ExperimentReport run_variation_invariance(const VariationInvarianceParams& p);

}  // namespace difflab
