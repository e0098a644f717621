#include "difflab/diffeo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "difflab/quadrature.hpp"
#include "difflab/variation.hpp"

namespace difflab {
namespace detail {

namespace {

// Gauss-Legendre nodes/weights on [-1,1], computed once by Newton iteration.
struct GaussRule {
    std::vector<double> nodes, weights;
};

const GaussRule& gl24() {
    static const GaussRule rule = [] {
        const int n = 24;
        GaussRule r;
        r.nodes.resize(n);
        r.weights.resize(n);
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            r.nodes[i] = x;
            r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

double gl_exp_integral(const Polynomial& p, double a, double b) {
    const GaussRule& r = gl24();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * std::exp(p.eval(mid + half * r.nodes[i]));
    return s * half;
}

double frac(double x) {
    double f = x - std::floor(x);
    return (f == 1.0) ? 0.0 : f;
}

}  // namespace

class LiftNode {
  public:
    explicit LiftNode(bool periodic) : periodic_(periodic) {}
    virtual ~LiftNode() = default;

    double lift(double x) const {
        if (!periodic_) return core_lift(x);
        double n = std::floor(x);
        return n + core_lift(x - n);
    }

    Jet taylor(double x, int order) const {
        if (!periodic_) return core_taylor(x, order);
        double n = std::floor(x);
        Jet j = core_taylor(x - n, order);
        j[0] += n;
        return j;
    }

    double inverse_lift(double y) const {
        if (!periodic_) return core_inverse(y);
        double c0 = core_lift(0.0);
        double n = std::floor(y - c0);
        return n + core_inverse(y - n);
    }

    virtual std::vector<double> breakpoints() const = 0;

  protected:
    bool periodic_;
    virtual double core_lift(double x) const = 0;
    virtual Jet core_taylor(double x, int order) const = 0;
    virtual double core_inverse(double y) const = 0;
};

class AffineNode final : public LiftNode {
  public:
    AffineNode(double rho, bool periodic) : LiftNode(periodic), rho_(rho) {}
    std::vector<double> breakpoints() const override { return {}; }

  protected:
    double core_lift(double x) const override { return x + rho_; }
    Jet core_taylor(double x, int order) const override {
        Jet j(static_cast<std::size_t>(order) + 1, 0.0);
        j[0] = x + rho_;
        if (order >= 1) j[1] = 1.0;
        return j;
    }
    double core_inverse(double y) const override { return y - rho_; }

  private:
    double rho_;
};

/// Lift x -> rho + (int_0^x e^G)/Z built from exact per-piece antiderivatives
/// of e^G: closed form where G is piecewise linear, cached Gauss panels on
/// higher-degree pieces.
class ExpIntegralNode final : public LiftNode {
  public:
    ExpIntegralNode(const BVFunc& G, double rho, bool periodic)
        : LiftNode(periodic), rho_(rho) {
        std::vector<double> breaks = G.structural_breakpoints();
        if (breaks.empty() || breaks.front() != 0.0)
            breaks.insert(breaks.begin(), 0.0);
        if (breaks.back() != 1.0) breaks.push_back(1.0);
        if (breaks.size() > (1u << 22))
            throw std::runtime_error("from_log_derivative: too many pieces");

        pieces_.reserve(breaks.size() - 1);
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
            Piece pc;
            pc.x0 = breaks[i];
            pc.x1 = breaks[i + 1];
            double mid = 0.5 * (pc.x0 + pc.x1);
            const auto& ac = G.ac();
            std::size_t ai = ac.piece_index(mid);
            Polynomial p = ac.pieces()[ai].rebased(pc.x0 - ac.breakpoints()[ai]);
            double v0 = 0.0, slope = 0.0;
            for (const auto& s : G.singular()) {
                v0 += s.eval(pc.x0);
                slope += s.ramp_derivative(mid);
            }
            p = p + Polynomial({v0, slope});
            pc.poly = p;
            pc.prefix = acc;
            double len = pc.x1 - pc.x0;
            if (p.degree() <= 1) {
                acc += linear_exp_integral(p, len);
            } else {
                int np = std::max(1, static_cast<int>(std::ceil(len / 0.0625)));
                pc.panel_width = len / np;
                pc.panel_prefix.resize(np);
                double a2 = 0.0;
                for (int k = 0; k < np; ++k) {
                    pc.panel_prefix[k] = a2;
                    a2 += gl_exp_integral(p, k * pc.panel_width, (k + 1) * pc.panel_width);
                }
                acc += a2;
            }
            pieces_.push_back(std::move(pc));
        }
        z_ = acc;
        starts_.reserve(pieces_.size());
        for (const auto& pc : pieces_) starts_.push_back(pc.x0);
    }

    double z() const { return z_; }

    std::vector<double> breakpoints() const override {
        std::vector<double> b = starts_;
        b.push_back(1.0);
        return b;
    }

  protected:
    double core_lift(double x) const override { return rho_ + prefix_at(x) / z_; }

    Jet core_taylor(double x, int order) const override {
        const Piece& pc = piece_at(x);
        Jet gjet = pc.poly.rebased(x - pc.x0).coeffs();
        Jet fp = jet_exp(gjet, std::max(0, order - 1));
        Jet j(static_cast<std::size_t>(order) + 1, 0.0);
        j[0] = rho_ + prefix_at(x) / z_;
        for (int m = 1; m <= order; ++m) j[m] = fp[m - 1] / (z_ * m);
        return j;
    }

    double core_inverse(double y) const override {
        double target = (y - rho_) * z_;
        // piece whose prefix range contains the target
        std::size_t lo = 0, hi = pieces_.size() - 1;
        while (lo < hi) {
            std::size_t m = (lo + hi + 1) / 2;
            if (pieces_[m].prefix <= target) lo = m; else hi = m - 1;
        }
        const Piece& pc = pieces_[lo];
        double rem = target - pc.prefix;
        double len = pc.x1 - pc.x0;
        if (pc.poly.degree() <= 1) return pc.x0 + invert_linear_exp(pc.poly, rem, len);

        // bracketed Newton on the cached-panel antiderivative
        double a = 0.0, b = len;
        double t = std::clamp(rem / std::max(1e-300, piece_total(pc)) * len, a, b);
        for (int it = 0; it < 100; ++it) {
            double val = partial(pc, t) - rem;
            if (val > 0.0) b = t; else a = t;
            double d = std::exp(pc.poly.eval(t));
            double step = val / d;
            double nt = t - step;
            if (!(nt > a && nt < b)) nt = 0.5 * (a + b);
            if (std::abs(nt - t) < 1e-16 * std::max(1.0, len) && std::abs(val) < 1e-13 * z_)
                return pc.x0 + nt;
            t = nt;
            if (b - a < 1e-16) break;
        }
        if (std::abs(partial(pc, t) - rem) > 1e-10 * z_)
            throw std::runtime_error("inverse_lift: root refinement stalled");
        return pc.x0 + t;
    }

  private:
    struct Piece {
        double x0, x1;
        Polynomial poly;  // local coordinates at x0
        double prefix;    // int_0^{x0} e^G
        double panel_width = 0.0;
        std::vector<double> panel_prefix;  // empty for linear pieces
    };

    double rho_, z_ = 1.0;
    std::vector<Piece> pieces_;
    std::vector<double> starts_;

    static double linear_exp_integral(const Polynomial& p, double t) {
        double c0 = p.coeffs()[0];
        double c1 = p.degree() >= 1 ? p.coeffs()[1] : 0.0;
        if (c1 == 0.0) return t * std::exp(c0);
        return std::exp(c0) * std::expm1(c1 * t) / c1;
    }

    static double invert_linear_exp(const Polynomial& p, double target, double len) {
        double c0 = p.coeffs()[0];
        double c1 = p.degree() >= 1 ? p.coeffs()[1] : 0.0;
        double t;
        if (std::abs(c1) < 1e-12) {
            double u = target * std::exp(-c0);
            t = u * (1.0 - 0.5 * c1 * u);
        } else {
            t = std::log1p(c1 * target * std::exp(-c0)) / c1;
        }
        return std::clamp(t, 0.0, len);
    }

    double piece_total(const Piece& pc) const { return partial(pc, pc.x1 - pc.x0); }

    double partial(const Piece& pc, double t) const {
        if (pc.panel_prefix.empty()) return linear_exp_integral(pc.poly, t);
        int k = std::min<int>(static_cast<int>(pc.panel_prefix.size()) - 1,
                              static_cast<int>(t / pc.panel_width));
        if (k < 0) k = 0;
        return pc.panel_prefix[k] + gl_exp_integral(pc.poly, k * pc.panel_width, t);
    }

    const Piece& piece_at(double x) const {
        auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
        std::size_t i = (it == starts_.begin()) ? 0 : (it - starts_.begin() - 1);
        return pieces_[std::min(i, pieces_.size() - 1)];
    }

    double prefix_at(double x) const {
        x = std::clamp(x, 0.0, 1.0);
        const Piece& pc = piece_at(x);
        return pc.prefix + partial(pc, x - pc.x0);
    }
};

/// Lift given directly as a monotone piecewise polynomial.
class PolyLiftNode final : public LiftNode {
  public:
    PolyLiftNode(std::vector<double> breaks, std::vector<Polynomial> polys,
                 bool periodic)
        : LiftNode(periodic), breaks_(std::move(breaks)), polys_(std::move(polys)) {}

    std::vector<double> breakpoints() const override { return breaks_; }

  protected:
    double core_lift(double x) const override {
        std::size_t i = index(x);
        return polys_[i].eval(x - breaks_[i]);
    }
    Jet core_taylor(double x, int order) const override {
        std::size_t i = index(x);
        Jet j = polys_[i].rebased(x - breaks_[i]).coeffs();
        j.resize(static_cast<std::size_t>(order) + 1, 0.0);
        return j;
    }
    double core_inverse(double y) const override {
        // monotone piecewise cubic; locate segment by endpoint values
        std::size_t i = 0;
        while (i + 1 < polys_.size() &&
               polys_[i + 1].eval(0.0) <= y)  // value at segment start
            ++i;
        double a = 0.0, b = breaks_[i + 1] - breaks_[i];
        const Polynomial& p = polys_[i];
        Polynomial dp = p.derivative();
        double t = std::clamp(y - p.eval(0.0), a, b);
        for (int it = 0; it < 100; ++it) {
            double val = p.eval(t) - y;
            if (val > 0.0) b = t; else a = t;
            double nt = t - val / dp.eval(t);
            if (!(nt > a && nt < b)) nt = 0.5 * (a + b);
            if (std::abs(nt - t) < 1e-16) { t = nt; break; }
            t = nt;
        }
        return breaks_[i] + t;
    }

  private:
    std::vector<double> breaks_;
    std::vector<Polynomial> polys_;

    std::size_t index(double x) const {
        if (x <= breaks_.front()) return 0;
        if (x >= breaks_.back()) return polys_.size() - 1;
        auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
        return static_cast<std::size_t>(it - breaks_.begin()) - 1;
    }
};

class ComposeNode final : public LiftNode {
  public:
    ComposeNode(std::shared_ptr<const LiftNode> outer,
                std::shared_ptr<const LiftNode> inner, bool periodic)
        : LiftNode(periodic), outer_(std::move(outer)), inner_(std::move(inner)) {
        m0_ = periodic ? std::floor(outer_->lift(inner_->lift(0.0))) : 0.0;
    }

    std::vector<double> breakpoints() const override {
        std::vector<double> b = inner_->breakpoints();
        std::vector<double> ob = outer_->breakpoints();
        std::size_t stride = ob.size() > 20000 ? ob.size() / 20000 + 1 : 1;
        for (std::size_t i = 0; i < ob.size(); i += stride) {
            double x = inner_->inverse_lift(ob[i]);
            if (periodic_) x = frac(x);
            if (x >= 0.0 && x <= 1.0) b.push_back(x);
        }
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        return b;
    }

  protected:
    double core_lift(double x) const override {
        return outer_->lift(inner_->lift(x)) - m0_;
    }
    Jet core_taylor(double x, int order) const override {
        Jet ji = inner_->taylor(x, order);
        Jet jo = outer_->taylor(ji[0], order);
        Jet r = jet_compose(jo, ji, order);
        r[0] -= m0_;
        return r;
    }
    double core_inverse(double y) const override {
        return inner_->inverse_lift(outer_->inverse_lift(y + m0_));
    }

  private:
    std::shared_ptr<const LiftNode> outer_, inner_;
    double m0_;
};

class InverseNode final : public LiftNode {
  public:
    InverseNode(std::shared_ptr<const LiftNode> base, bool periodic)
        : LiftNode(periodic), base_(std::move(base)) {
        m_ = (periodic && base_->inverse_lift(0.0) < 0.0) ? 1.0 : 0.0;
    }

    std::vector<double> breakpoints() const override {
        std::vector<double> b;
        for (double x : base_->breakpoints()) {
            double y = base_->lift(x);
            if (periodic_) y = frac(y);
            if (y >= 0.0 && y <= 1.0) b.push_back(y);
        }
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        return b;
    }

  protected:
    double core_lift(double x) const override { return base_->inverse_lift(x) + m_; }
    Jet core_taylor(double x, int order) const override {
        double y = base_->inverse_lift(x);
        Jet jb = base_->taylor(y, order);
        Jet g = jet_inverse(jb, order);
        g[0] = y + m_;
        return g;
    }
    double core_inverse(double y) const override { return base_->lift(y - m_); }

  private:
    std::shared_ptr<const LiftNode> base_;
    double m_;
};

}  // namespace detail

using detail::LiftNode;

Diffeo Diffeo::identity(Manifold m, int k) {
    Diffeo d;
    d.manifold_ = m;
    d.k_ = k;
    d.cls_ = RegClass::CkAC;
    d.affine_ = true;
    d.rho_ = 0.0;
    d.node_ = std::make_shared<detail::AffineNode>(0.0, m == Manifold::Circle);
    d.logd_ = std::make_shared<BVFunc>();
    return d;
}

Diffeo Diffeo::rotation(double h, int k) {
    Diffeo d;
    d.manifold_ = Manifold::Circle;
    d.k_ = k;
    d.cls_ = RegClass::CkAC;
    d.affine_ = true;
    d.rho_ = h - std::floor(h);
    if (d.rho_ == 1.0) d.rho_ = 0.0;
    d.node_ = std::make_shared<detail::AffineNode>(d.rho_, true);
    d.logd_ = std::make_shared<BVFunc>();
    return d;
}

Diffeo Diffeo::from_log_derivative(const BVFunc& G, Manifold m, double rotation_offset,
                                   int k) {
    if (m == Manifold::Interval && rotation_offset != 0.0)
        throw std::invalid_argument("from_log_derivative: interval maps take no offset");
    if (m == Manifold::Circle && k >= 1 &&
        std::abs(G.eval(0.0) - G.eval(1.0)) > 1e-12)
        throw std::invalid_argument("from_log_derivative: need G(0) = G(1) on the circle");
    Diffeo d;
    d.manifold_ = m;
    d.k_ = k;
    d.cls_ = G.purely_ac() ? RegClass::CkAC : RegClass::CkBV;
    d.rho_ = m == Manifold::Circle ? rotation_offset - std::floor(rotation_offset) : 0.0;
    auto node = std::make_shared<detail::ExpIntegralNode>(G, d.rho_, m == Manifold::Circle);
    double logz = std::log(node->z());
    d.node_ = node;
    PiecewisePolynomial shifted = G.ac() + PiecewisePolynomial::constant(-logz);
    d.logd_ = std::make_shared<BVFunc>(
        PiecewisePolynomial(shifted.breakpoints(), shifted.pieces()), G.singular());
    d.source_ = std::make_shared<BVFunc>(G);
    return d;
}

Diffeo Diffeo::ramp_shift(double h) {
    if (!(std::abs(h) < 1.0 / 36.0))
        throw std::invalid_argument("ramp_shift: need |h| < 1/36");
    const double w = 1.0 / 24.0;
    const double s0 = 0.5 * (1.0 / 6.0 - std::abs(h) - w);
    const double s2 = 5.0 / 6.0 + 0.5 * (1.0 / 6.0 - w);
    // smoothstep sigma(u) = 3u^2 - 2u^3 on each ramp keeps the map C^1
    double iw2 = 1.0 / (w * w), iw3 = 1.0 / (w * w * w);
    std::vector<double> breaks{0.0, s0, s0 + w, s2, s2 + w, 1.0};
    std::vector<Polynomial> polys;
    polys.push_back(Polynomial({0.0, 1.0}));
    polys.push_back(Polynomial({s0, 1.0, 3.0 * h * iw2, -2.0 * h * iw3}));
    polys.push_back(Polynomial({s0 + w + h, 1.0}));
    polys.push_back(Polynomial({s2 + h, 1.0, -3.0 * h * iw2, 2.0 * h * iw3}));
    polys.push_back(Polynomial({s2 + w, 1.0}));
    Diffeo d;
    d.manifold_ = Manifold::Interval;
    d.k_ = 1;
    d.cls_ = RegClass::CkAC;
    d.node_ = std::make_shared<detail::PolyLiftNode>(std::move(breaks), std::move(polys),
                                                     false);
    return d;
}

Diffeo Diffeo::from_polynomial_lift(const PiecewisePolynomial& lift, Manifold m, int k) {
    double f0 = lift.eval(0.0), f1 = lift.eval(1.0);
    if (m == Manifold::Interval) {
        if (std::abs(f0) > 1e-12 || std::abs(f1 - 1.0) > 1e-12)
            throw std::invalid_argument("from_polynomial_lift: must fix 0 and 1");
    } else {
        if (!(f0 >= 0.0 && f0 < 1.0) || std::abs(f1 - f0 - 1.0) > 1e-12)
            throw std::invalid_argument("from_polynomial_lift: lift conditions violated");
    }
    // strict monotonicity: check f' at a fine grid and at its extrema
    PiecewisePolynomial d = lift.derivative();
    for (int i = 0; i <= 256; ++i) {
        double x = static_cast<double>(i) / 256.0;
        if (!(d.eval(x) > 0.0))
            throw std::invalid_argument("from_polynomial_lift: derivative not positive");
    }
    // derivative tower continuity across interior breakpoints up to order k
    PiecewisePolynomial dj = lift;
    for (int j = 0; j <= k; ++j) {
        const auto& bp = dj.breakpoints();
        for (std::size_t i = 1; i + 1 < bp.size(); ++i) {
            double left = dj.pieces()[i - 1].eval(bp[i] - bp[i - 1]);
            double right = dj.pieces()[i].eval(0.0);
            if (std::abs(left - right) > 1e-10)
                throw std::invalid_argument(
                    "from_polynomial_lift: lift is not C^k at a breakpoint");
        }
        dj = dj.derivative();
    }
    Diffeo out;
    out.manifold_ = m;
    out.k_ = k;
    out.cls_ = RegClass::CkAC;
    out.node_ = std::make_shared<detail::PolyLiftNode>(lift.breakpoints(), lift.pieces(),
                                                       m == Manifold::Circle);
    return out;
}

double Diffeo::lift(double x) const { return node_->lift(x); }

double Diffeo::eval(double x) const {
    double y = node_->lift(x);
    if (manifold_ == Manifold::Interval) return std::clamp(y, 0.0, 1.0);
    return detail::frac(y);
}

double Diffeo::inverse_lift(double y) const { return node_->inverse_lift(y); }

std::vector<double> Diffeo::jet(double x, int order) const {
    return derivatives_from_jet(node_->taylor(x, order));
}

double Diffeo::derivative(double x, int j) const {
    if (j < 0 || j > k_ + 1)
        throw std::invalid_argument("Diffeo::derivative: order out of range");
    return jet(x, j)[static_cast<std::size_t>(j)];
}

RealFunction Diffeo::derivative_handle(int j) const {
    if (j < 1 || j > k_ + 1)
        throw std::invalid_argument("Diffeo::derivative_handle: order out of range");
    Diffeo copy = *this;
    return RealFunction([copy, j](double x) { return copy.derivative(x, j); },
                        structural_breakpoints());
}

RealFunction Diffeo::log_derivative_handle() const {
    if (logd_) return logd_->as_real_function();
    Diffeo copy = *this;
    return RealFunction([copy](double x) { return std::log(copy.derivative(x, 1)); },
                        structural_breakpoints());
}

std::vector<double> Diffeo::structural_breakpoints() const {
    std::vector<double> b = node_->breakpoints();
    b.erase(std::remove_if(b.begin(), b.end(),
                           [](double x) { return x < 0.0 || x > 1.0; }),
            b.end());
    return b;
}

Diffeo compose(const Diffeo& f, const Diffeo& g) {
    if (f.manifold_ != g.manifold_)
        throw std::invalid_argument("compose: manifold mismatch");
    if (f.k_ != g.k_) throw std::invalid_argument("compose: order mismatch");
    if (f.affine_ && g.affine_) {
        if (f.manifold_ == Manifold::Circle)
            return Diffeo::rotation(f.rho_ + g.rho_, f.k_);
        return Diffeo::identity(Manifold::Interval, f.k_);
    }
    if (f.affine_ && f.rho_ == 0.0) return g;
    if (g.affine_ && g.rho_ == 0.0) return f;
    Diffeo d;
    d.manifold_ = f.manifold_;
    d.k_ = f.k_;
    d.cls_ = (f.cls_ == RegClass::CkBV || g.cls_ == RegClass::CkBV) ? RegClass::CkBV
                                                                    : RegClass::CkAC;
    d.node_ = std::make_shared<detail::ComposeNode>(f.node_, g.node_,
                                                    f.manifold_ == Manifold::Circle);
    return d;
}

Diffeo invert(const Diffeo& f) {
    if (f.affine_) {
        if (f.manifold_ == Manifold::Circle) return Diffeo::rotation(-f.rho_, f.k_);
        return Diffeo::identity(Manifold::Interval, f.k_);
    }
    Diffeo d;
    d.manifold_ = f.manifold_;
    d.k_ = f.k_;
    d.cls_ = f.cls_;
    d.node_ = std::make_shared<detail::InverseNode>(f.node_,
                                                    f.manifold_ == Manifold::Circle);
    return d;
}

double pushforward_measure(const Diffeo& f, const IntervalUnion& E, double abs_tol) {
    double total = 0.0;
    RealFunction fp = f.derivative_handle(1);
    for (const auto& part : E.parts()) {
        if (part.lo < 0.0 || part.hi > 1.0)
            throw std::domain_error("pushforward_measure: E must lie in [0,1]");
        total += integrate(fp, part.lo, part.hi, abs_tol).value;
    }
    return total;
}

RegularityReport regularity_check(const Diffeo& f) {
    RegularityReport rep;
    rep.cls = f.reg_class();
    if (const BVFunc* g = f.log_derivative_bv()) {
        rep.log_derivative_variation = g->total_variation();
        rep.singular_part_empty = g->singular().empty();
    } else {
        rep.log_derivative_variation =
            variation_oracle(f.log_derivative_handle(), Interval::unit(), 1e-9).value;
        rep.singular_part_empty = f.reg_class() != RegClass::CkBV;
    }
    return rep;
}

RealFunction compose_with(const BVFunc& F, const Diffeo& u) {
    BVFunc fc = F;
    Diffeo uc = u;
    std::vector<double> breaks = u.structural_breakpoints();
    std::vector<double> fb = F.structural_breakpoints();
    std::size_t stride = fb.size() > 200000 ? fb.size() / 200000 + 1 : 1;
    for (std::size_t i = 0; i < fb.size(); i += stride) {
        double x = u.inverse_lift(fb[i]);
        if (u.manifold() == Manifold::Circle) x = detail::frac(x);
        if (x >= 0.0 && x <= 1.0) breaks.push_back(x);
    }
    if (u.manifold() == Manifold::Circle) {
        double q = u.inverse_lift(1.0);
        q = detail::frac(q);
        if (q > 0.0 && q < 1.0) breaks.push_back(q);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    auto fn = [fc, uc](double x) { return fc.eval_extended(uc.eval(x)); };
    return RealFunction(std::move(fn), std::move(breaks));
}

double composed_total_variation(const BVFunc& F, const Diffeo& u, double oracle_tol) {
    // Variation is invariant under composition with an orientation-preserving
    // homeomorphism, so V(F o u) is V(F) regardless of u.
    (void)u;
    return F.total_variation(Interval::unit(), oracle_tol);
}

double bv_norm_of_handle(const RealFunction& h, double oracle_tol) {
    return std::abs(h(0.0)) + variation_oracle(h, Interval::unit(), oracle_tol).value;
}

}  // namespace difflab
