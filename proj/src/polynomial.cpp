#include "difflab/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace difflab {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::eval(double t) const {
    double v = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
    return v;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    std::vector<double> a(coeffs_.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        a[i + 1] = coeffs_[i] / static_cast<double>(i + 1);
    return Polynomial(std::move(a));
}

double Polynomial::integrate(double t0, double t1) const {
    Polynomial a = antiderivative();
    return a.eval(t1) - a.eval(t0);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + o.scaled(-1.0);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<double> c(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(double k) const {
    std::vector<double> c = coeffs_;
    for (double& x : c) x *= k;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::rebased(double shift) const {
    // Horner-style Taylor shift: q(s) = p(s + shift).
    std::vector<double> c(coeffs_.size(), 0.0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        for (std::size_t j = c.size() - 1; j > 0; --j)
            c[j] = c[j] * shift + c[j - 1];
        c[0] = c[0] * shift + coeffs_[i];
    }
    return Polynomial(std::move(c));
}

bool Polynomial::is_zero(double tol) const {
    for (double c : coeffs_)
        if (std::abs(c) > tol) return false;
    return true;
}

std::vector<double> Polynomial::sign_changes(double lo, double hi) const {
    std::vector<double> roots;
    if (!(lo < hi) || degree() == 0) return roots;
    const int samples = 64 * std::max(1, degree());
    double prev_x = lo, prev_v = eval(lo);
    for (int i = 1; i <= samples; ++i) {
        double x = lo + (hi - lo) * static_cast<double>(i) / samples;
        double v = eval(x);
        if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
            double a = prev_x, b = x, fa = prev_v;
            for (int it = 0; it < 80; ++it) {
                double m = 0.5 * (a + b), fm = eval(m);
                if (fm == 0.0) { a = b = m; break; }
                if ((fa < 0.0) == (fm < 0.0)) { a = m; fa = fm; } else { b = m; }
                if (b - a < 1e-15 * (1.0 + std::abs(m))) break;
            }
            roots.push_back(0.5 * (a + b));
        }
        if (v != 0.0 || i == samples) { prev_x = x; prev_v = v; }
    }
    return roots;
}

}  // namespace difflab
