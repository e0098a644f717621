#include "difflab/piecewise_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace difflab {

PiecewisePolynomial::PiecewisePolynomial()
    : breaks_{0.0, 1.0}, pieces_{Polynomial::constant(0.0)} {}

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breaks,
                                         std::vector<Polynomial> pieces, bool stitch)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
    if (breaks_.size() < 2 || pieces_.size() + 1 != breaks_.size())
        throw std::invalid_argument("PiecewisePolynomial: breaks/pieces size mismatch");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i] > breaks_[i - 1]))
            throw std::invalid_argument("PiecewisePolynomial: breakpoints not increasing");
    if (breaks_.front() != 0.0 || breaks_.back() != 1.0)
        throw std::invalid_argument("PiecewisePolynomial: domain must be [0,1]");
    if (stitch) stitch_continuity();
}

void PiecewisePolynomial::stitch_continuity() {
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        double left_val = pieces_[i - 1].eval(breaks_[i] - breaks_[i - 1]);
        Polynomial p = pieces_[i];
        std::vector<double> c = p.coeffs();
        c[0] = left_val;
        pieces_[i] = Polynomial(std::move(c));
    }
}

PiecewisePolynomial PiecewisePolynomial::constant(double c) {
    return PiecewisePolynomial({0.0, 1.0}, {Polynomial::constant(c)});
}

PiecewisePolynomial PiecewisePolynomial::from_global(const Polynomial& p) {
    return PiecewisePolynomial({0.0, 1.0}, {p});
}

std::size_t PiecewisePolynomial::piece_index(double x) const {
    if (x <= breaks_.front()) return 0;
    if (x >= breaks_.back()) return pieces_.size() - 1;
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

double PiecewisePolynomial::eval(double x) const {
    std::size_t i = piece_index(x);
    return pieces_[i].eval(x - breaks_[i]);
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
    std::vector<Polynomial> d;
    d.reserve(pieces_.size());
    for (const auto& p : pieces_) d.push_back(p.derivative());
    return PiecewisePolynomial(breaks_, std::move(d), /*stitch=*/false);
}

PiecewisePolynomial PiecewisePolynomial::antiderivative() const {
    std::vector<Polynomial> a;
    a.reserve(pieces_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        Polynomial anti = pieces_[i].antiderivative();
        std::vector<double> c = anti.coeffs();
        c[0] = acc;
        a.emplace_back(std::move(c));
        acc = a.back().eval(breaks_[i + 1] - breaks_[i]);
    }
    return PiecewisePolynomial(breaks_, std::move(a), /*stitch=*/false);
}

double PiecewisePolynomial::integrate(double a, double b) const {
    if (a > b) return -integrate(b, a);
    double total = 0.0;
    std::size_t i0 = piece_index(a), i1 = piece_index(b);
    for (std::size_t i = i0; i <= i1; ++i) {
        double lo = std::max(a, breaks_[i]);
        double hi = std::min(b, breaks_[i + 1]);
        if (hi > lo) total += pieces_[i].integrate(lo - breaks_[i], hi - breaks_[i]);
    }
    return total;
}

double PiecewisePolynomial::total_variation(double a, double b) const {
    if (a > b) std::swap(a, b);
    double total = 0.0;
    std::size_t i0 = piece_index(a), i1 = piece_index(b);
    for (std::size_t i = i0; i <= i1; ++i) {
        double lo = std::max(a, breaks_[i]);
        double hi = std::min(b, breaks_[i + 1]);
        if (!(hi > lo)) continue;
        double tl = lo - breaks_[i], th = hi - breaks_[i];
        std::vector<double> stops = pieces_[i].derivative().sign_changes(tl, th);
        double prev_t = tl, prev_v = pieces_[i].eval(tl);
        for (double t : stops) {
            double v = pieces_[i].eval(t);
            total += std::abs(v - prev_v);
            prev_t = t;
            prev_v = v;
        }
        (void)prev_t;
        total += std::abs(pieces_[i].eval(th) - prev_v);
    }
    return total;
}

double PiecewisePolynomial::integrate_abs(double a, double b) const {
    if (a > b) std::swap(a, b);
    double total = 0.0;
    std::size_t i0 = piece_index(a), i1 = piece_index(b);
    for (std::size_t i = i0; i <= i1; ++i) {
        double lo = std::max(a, breaks_[i]);
        double hi = std::min(b, breaks_[i + 1]);
        if (!(hi > lo)) continue;
        double tl = lo - breaks_[i], th = hi - breaks_[i];
        std::vector<double> stops = pieces_[i].sign_changes(tl, th);
        stops.push_back(th);
        double prev = tl;
        for (double t : stops) {
            total += std::abs(pieces_[i].integrate(prev, t));
            prev = t;
        }
    }
    return total;
}

std::vector<double> merge_breakpoints(const std::vector<double>& a,
                                      const std::vector<double>& b) {
    std::vector<double> m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

PiecewisePolynomial PiecewisePolynomial::operator+(const PiecewisePolynomial& o) const {
    std::vector<double> breaks = merge_breakpoints(breaks_, o.breaks_);
    std::vector<Polynomial> pieces;
    pieces.reserve(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double left = breaks[i];
        std::size_t ia = piece_index(0.5 * (left + breaks[i + 1]));
        std::size_t ib = o.piece_index(0.5 * (left + breaks[i + 1]));
        Polynomial pa = pieces_[ia].rebased(left - breaks_[ia]);
        Polynomial pb = o.pieces_[ib].rebased(left - o.breaks_[ib]);
        pieces.push_back(pa + pb);
    }
    // exact piece algebra; callers that need the continuity invariant restitch
    return PiecewisePolynomial(std::move(breaks), std::move(pieces), /*stitch=*/false);
}

PiecewisePolynomial PiecewisePolynomial::operator-(const PiecewisePolynomial& o) const {
    return *this + o.scaled(-1.0);
}

PiecewisePolynomial PiecewisePolynomial::operator*(const PiecewisePolynomial& o) const {
    std::vector<double> breaks = merge_breakpoints(breaks_, o.breaks_);
    std::vector<Polynomial> pieces;
    pieces.reserve(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double left = breaks[i];
        std::size_t ia = piece_index(0.5 * (left + breaks[i + 1]));
        std::size_t ib = o.piece_index(0.5 * (left + breaks[i + 1]));
        Polynomial pa = pieces_[ia].rebased(left - breaks_[ia]);
        Polynomial pb = o.pieces_[ib].rebased(left - o.breaks_[ib]);
        pieces.push_back(pa * pb);
    }
    return PiecewisePolynomial(std::move(breaks), std::move(pieces), /*stitch=*/false);
}

PiecewisePolynomial PiecewisePolynomial::scaled(double k) const {
    std::vector<Polynomial> pieces;
    pieces.reserve(pieces_.size());
    for (const auto& p : pieces_) pieces.push_back(p.scaled(k));
    return PiecewisePolynomial(breaks_, std::move(pieces), /*stitch=*/false);
}

bool PiecewisePolynomial::is_constant(double tol) const {
    double c0 = pieces_.front().coeffs()[0];
    for (const auto& p : pieces_) {
        const auto& c = p.coeffs();
        if (std::abs(c[0] - c0) > tol) return false;
        for (std::size_t j = 1; j < c.size(); ++j)
            if (std::abs(c[j]) > tol) return false;
    }
    return true;
}

bool PiecewisePolynomial::is_zero(double tol) const {
    for (const auto& p : pieces_)
        if (!p.is_zero(tol)) return false;
    return true;
}

}  // namespace difflab
