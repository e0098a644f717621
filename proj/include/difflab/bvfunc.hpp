#pragma once

#include <utility>
#include <vector>

#include "difflab/interval.hpp"
#include "difflab/piecewise_polynomial.hpp"
#include "difflab/real_function.hpp"
#include "difflab/staircase.hpp"
#include "difflab/variation.hpp"

namespace difflab {

/// A.e.-derivative handle of a BVFunc. Off the singular active set it
/// evaluates the polynomial derivative of the absolutely continuous part;
/// on the active set the idealized derivative is undefined and the handle
/// returns NaN. `everywhere_defined` is true iff there is no singular part.
struct DensityHandle {
    RealFunction fn;
    bool everywhere_defined = true;
};

/// Continuous function of bounded variation on [0,1] in Lebesgue normal
/// form: an absolutely continuous piecewise-polynomial part plus a list of
/// depth-truncated singular staircases.
class BVFunc {
  public:
    BVFunc() = default;
    explicit BVFunc(PiecewisePolynomial ac) : ac_(std::move(ac)) {}
    explicit BVFunc(SingularStaircase s) : singular_{std::move(s)} {}
    BVFunc(PiecewisePolynomial ac, std::vector<SingularStaircase> singular)
        : ac_(std::move(ac)), singular_(std::move(singular)) {}

    /// Value at x in [0,1]; throws std::domain_error outside.
    double eval(double x) const;
    /// Unchecked evaluation valid on all of R (staircases extend constantly,
    /// the ac part extends by its boundary pieces).
    double eval_extended(double x) const;

    const PiecewisePolynomial& ac() const { return ac_; }
    const std::vector<SingularStaircase>& singular() const { return singular_; }
    bool purely_ac() const { return singular_.empty(); }

    /// (absolutely continuous part, singular part) as stand-alone functions.
    std::pair<BVFunc, BVFunc> lebesgue_parts() const;

    DensityHandle derivative_ae() const;

    /// Total variation over iv. Uses exact structural computation when the
    /// representation certifies it (pure ac part; or constant ac part with
    /// pairwise-disjoint staircase active sets); otherwise delegates to the
    /// variation oracle at tolerance oracle_tol.
    double total_variation(Interval iv = Interval::unit(),
                           double oracle_tol = 1e-9) const;
    /// Forces the brute-force route regardless of structure.
    VariationResult total_variation_oracle(Interval iv = Interval::unit(),
                                           double oracle_tol = 1e-9) const;
    /// True if total_variation will take a structural fast path on iv.
    bool structural_variation_available() const;

    /// |F(0)| + V(F, [0,1]).
    double bv_norm(double oracle_tol = 1e-9) const;

    BVFunc scaled(double k) const;
    BVFunc translated(double h) const;

    /// Evaluable handle with structural breakpoints (ac breakpoints, ac
    /// extremum locations, staircase ramp edges).
    RealFunction as_real_function() const;
    std::vector<double> structural_breakpoints() const;

  private:
    PiecewisePolynomial ac_;
    std::vector<SingularStaircase> singular_;
};

/// Pointwise linear combination sum_i coeffs[i] * funcs[i].
BVFunc linear_combine(const std::vector<double>& coeffs,
                      const std::vector<BVFunc>& funcs);

/// Depth-truncated classical Cantor function as a BVFunc.
BVFunc cantor(int depth = 20);

/// Member F_h of the 2r-separated family: rises from 0 to r/2 along a
/// staircase on [1/6-h, 1/3-h], plateaus at r/2, descends back to 0 on
/// [2/3-h, 5/6-h]. Requires r > 0 and |h| <= 1/6.
BVFunc separated_family_member(double r, double h, int depth = 20);

/// Adaptive-quadrature L1 norm of a density over iv.
double l1_norm(const DensityHandle& d, Interval iv = Interval::unit(),
               double abs_tol = 1e-9);
double l1_norm(const RealFunction& f, Interval iv = Interval::unit(),
               double abs_tol = 1e-9);

/// Supremum of |f| over iv, estimated on a refining grid seeded with f's
/// breakpoints; reported as a stabilized lower bound.
double uniform_norm(const RealFunction& f, Interval iv = Interval::unit());

/// sup over iv of |f| with refinement until the estimate is stable to tol.
double refine_sup(const std::function<double(double)>& f,
                  const std::vector<double>& seeds, Interval iv,
                  double tol = 1e-9);

}  // namespace difflab
