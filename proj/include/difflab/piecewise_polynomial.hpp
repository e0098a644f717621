#pragma once

#include <vector>

#include "difflab/interval.hpp"
#include "difflab/polynomial.hpp"

namespace difflab {

/// Piecewise polynomial on [0,1]. Piece i is defined on [breaks[i], breaks[i+1]]
/// in local coordinates t = x - breaks[i]. Construction stitches the constant
/// terms so two-sided evaluations at interior breakpoints agree exactly.
class PiecewisePolynomial {
  public:
    /// Zero function on [0,1].
    PiecewisePolynomial();
    PiecewisePolynomial(std::vector<double> breaks, std::vector<Polynomial> pieces,
                        bool stitch = true);

    static PiecewisePolynomial constant(double c);
    /// Single global polynomial on [0,1], coefficients at base point 0.
    static PiecewisePolynomial from_global(const Polynomial& p);

    double eval(double x) const;
    /// Derivative as a piecewise polynomial (may be discontinuous at breaks).
    PiecewisePolynomial derivative() const;
    /// Continuous antiderivative vanishing at 0.
    PiecewisePolynomial antiderivative() const;
    /// Exact integral over [a, b] within [0,1].
    double integrate(double a, double b) const;
    /// Exact total variation over [a, b]: sum of |increments| between
    /// monotonicity change points (derivative sign changes and breaks).
    double total_variation(double a, double b) const;
    /// Exact integral of the absolute value over [a, b].
    double integrate_abs(double a, double b) const;

    PiecewisePolynomial operator+(const PiecewisePolynomial& o) const;
    PiecewisePolynomial operator-(const PiecewisePolynomial& o) const;
    PiecewisePolynomial operator*(const PiecewisePolynomial& o) const;
    PiecewisePolynomial scaled(double k) const;

    bool is_constant(double tol = 0.0) const;
    bool is_zero(double tol = 0.0) const;

    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }

    std::size_t piece_index(double x) const;

  private:
    std::vector<double> breaks_;    // strictly increasing, 0 = first, 1 = last
    std::vector<Polynomial> pieces_;

    void stitch_continuity();
};

/// Merged strictly-increasing union of two sorted breakpoint lists.
std::vector<double> merge_breakpoints(const std::vector<double>& a,
                                      const std::vector<double>& b);

}  // namespace difflab
