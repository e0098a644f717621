#pragma once

#include <cstddef>
#include <vector>

namespace difflab {

/// Dense real polynomial in one variable, coefficients in increasing degree.
/// Used in local coordinates: a piece stores p(t) with t = x - left_break.
class Polynomial {
  public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial constant(double c) { return Polynomial({c}); }

    double eval(double t) const;
    Polynomial derivative() const;
    /// Antiderivative with constant term 0.
    Polynomial antiderivative() const;
    /// Exact integral over [t0, t1] (local coordinates).
    double integrate(double t0, double t1) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(double k) const;

    /// Rewrites p(t) as q(s) with s = t - shift, i.e. q(s) = p(s + shift).
    Polynomial rebased(double shift) const;

    /// Points in (lo, hi) where the polynomial changes sign, ascending.
    /// Even-multiplicity touches are not reported (no sign change).
    std::vector<double> sign_changes(double lo, double hi) const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    bool is_zero(double tol = 0.0) const;
    /// Constant-term mutation used to stitch value continuity across pieces.
    void set_constant_term(double c) { coeffs_[0] = c; }

  private:
    std::vector<double> coeffs_;
};

}  // namespace difflab
