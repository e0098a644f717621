#pragma once

#include <memory>
#include <string>
#include <vector>

#include "difflab/bvfunc.hpp"
#include "difflab/interval.hpp"
#include "difflab/real_function.hpp"
#include "difflab/series.hpp"

namespace difflab {

enum class Manifold { Interval, Circle };

/// Structural regularity tag: C^k, C^k with absolutely continuous k-th
/// derivative, or C^k with bounded-variation k-th derivative.
enum class RegClass { Ck, CkAC, CkBV };

namespace detail {
class LiftNode;
}

/// Orientation-preserving diffeomorphism of I or S^1, represented through its
/// lift. Immutable; all operations return new values. The derivative tower is
/// produced on demand by jet (truncated Taylor) arithmetic, so the chain,
/// product and inverse rules hold to machine precision at every order.
class Diffeo {
  public:
    static Diffeo identity(Manifold m, int k = 1);
    /// Circle rotation by h (taken mod 1): lift x -> x + h, log f' = 0.
    static Diffeo rotation(double h, int k = 1);
    /// f with log f' = G - log Z, i.e. lift x -> rho + (int_0^x e^G) / Z,
    /// Z = int_0^1 e^G. Interval maps force rho = 0. Circle maps require
    /// G(0) = G(1). Class CkAC if G has no singular part, CkBV otherwise.
    static Diffeo from_log_derivative(const BVFunc& G, Manifold m,
                                      double rotation_offset = 0.0, int k = 1);
    /// Interval diffeomorphism that is exactly x + h on a central plateau
    /// containing [1/6 - |h|, 5/6 + |h|], with C^1 cubic ramps of width 1/24
    /// back to the identity near the endpoints. Requires |h| < 1/36.
    static Diffeo ramp_shift(double h);
    /// Diffeomorphism whose lift is the given monotone piecewise polynomial.
    /// Interval lifts must fix 0 and 1; circle lifts need lift(1) = lift(0)+1
    /// with lift(0) in [0,1). The lift must be C^k across breakpoints.
    static Diffeo from_polynomial_lift(const PiecewisePolynomial& lift, Manifold m,
                                       int k = 1);

    Manifold manifold() const { return manifold_; }
    int order() const { return k_; }
    RegClass reg_class() const { return cls_; }
    /// True for circle rotations (including the identity).
    bool is_rotation() const { return affine_ && manifold_ == Manifold::Circle; }
    /// True when the lift is x + rho (identity or rotation).
    bool is_affine() const { return affine_; }
    double rotation_offset() const { return rho_; }

    /// Lift map on R (periodic extension for circle maps).
    double lift(double x) const;
    /// Point map on the manifold; values in [0,1).. interval maps return [0,1].
    double eval(double x) const;
    double inverse_lift(double y) const;

    /// [f(x), f'(x), ..., f^(order)(x)] of the lift.
    std::vector<double> jet(double x, int order) const;
    /// j-th derivative, 1 <= j <= k+1 (j = k+1 is the a.e. top density).
    double derivative(double x, int j) const;
    RealFunction derivative_handle(int j) const;

    /// log f' as an evaluable handle (always available).
    RealFunction log_derivative_handle() const;
    /// Normalized log-derivative as a BVFunc when structurally known
    /// (from_log_derivative and rotations); nullptr for composite nodes.
    const BVFunc* log_derivative_bv() const { return logd_.get(); }
    /// The G passed to from_log_derivative, for serialization; nullptr
    /// for affine and composite diffeos.
    const BVFunc* source_log_derivative() const { return source_.get(); }

    /// Structural breakpoints of the lift inside [0,1].
    std::vector<double> structural_breakpoints() const;

    friend Diffeo compose(const Diffeo& f, const Diffeo& g);
    friend Diffeo invert(const Diffeo& f);

  private:
    Manifold manifold_{Manifold::Interval};
    int k_{1};
    RegClass cls_{RegClass::CkAC};
    bool affine_{false};
    double rho_{0.0};
    std::shared_ptr<const detail::LiftNode> node_;
    std::shared_ptr<const BVFunc> logd_;
    std::shared_ptr<const BVFunc> source_;

    Diffeo() = default;
};

/// Group operations. compose(f, g) is x -> f(g(x)); both arguments must share
/// manifold and order (throws std::invalid_argument otherwise).
Diffeo compose(const Diffeo& f, const Diffeo& g);
Diffeo invert(const Diffeo& f);

/// Lebesgue measure of f(E) computed as sum over components of int_E f'.
double pushforward_measure(const Diffeo& f, const IntervalUnion& E,
                           double abs_tol = 1e-9);

struct RegularityReport {
    RegClass cls;
    double log_derivative_variation;
    bool singular_part_empty;
};

/// Reports the structural class and the computed variation of log f'.
RegularityReport regularity_check(const Diffeo& f);

/// Evaluable handle for F o u with structural breakpoints mapped through u.
RealFunction compose_with(const BVFunc& F, const Diffeo& u);
/// Total variation of F o u over [0,1]: equals V(F) structurally (variation
/// is invariant under composition with orientation-preserving homeos).
double composed_total_variation(const BVFunc& F, const Diffeo& u,
                                double oracle_tol = 1e-9);

/// |h(0)| + V(h) for an arbitrary evaluable handle, via the variation oracle.
double bv_norm_of_handle(const RealFunction& h, double oracle_tol = 1e-9);

}  // namespace difflab
