#include "difflab/series.hpp"

#include <cmath>
#include <stdexcept>

namespace difflab {

namespace {
Jet truncated(Jet a, int order) {
    a.resize(static_cast<std::size_t>(order) + 1, 0.0);
    return a;
}
}  // namespace

Jet jet_mul(const Jet& a, const Jet& b, int order) {
    Jet c(static_cast<std::size_t>(order) + 1, 0.0);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; j + i <= order && j < static_cast<int>(b.size()); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

Jet jet_compose(const Jet& outer, const Jet& inner, int order) {
    // w = inner - inner[0]; result = sum_k outer[k] w^k, Horner over k.
    Jet w = truncated(inner, order);
    w[0] = 0.0;
    Jet res(static_cast<std::size_t>(order) + 1, 0.0);
    for (int k = std::min<int>(order, static_cast<int>(outer.size()) - 1); k >= 0; --k) {
        res = jet_mul(res, w, order);
        res[0] += outer[k];
    }
    return res;
}

Jet jet_exp(const Jet& a, int order) {
    Jet in = truncated(a, order);
    Jet b(static_cast<std::size_t>(order) + 1, 0.0);
    b[0] = std::exp(in[0]);
    for (int n = 1; n <= order; ++n) {
        double s = 0.0;
        for (int j = 1; j <= n; ++j) s += j * in[j] * b[n - j];
        b[n] = s / n;
    }
    return b;
}

Jet jet_inverse(const Jet& a, int order) {
    Jet f = truncated(a, order);
    if (f[1] == 0.0) throw std::invalid_argument("jet_inverse: vanishing derivative");
    // Solve g(f(x0+t) - f0) = t order by order.
    Jet w = f;
    w[0] = 0.0;
    Jet g(static_cast<std::size_t>(order) + 1, 0.0);
    g[0] = 0.0;  // caller re-centers the value; this is the fluctuation jet
    if (order >= 1) g[1] = 1.0 / f[1];
    Jet wpow = w;  // w^1
    std::vector<Jet> powers{Jet{}, wpow};
    for (int k = 2; k <= order; ++k) powers.push_back(jet_mul(powers[k - 1], w, order));
    for (int m = 2; m <= order; ++m) {
        double acc = 0.0;  // coefficient of t^m in sum_{k<m} g_k w^k
        for (int k = 1; k < m; ++k) acc += g[k] * powers[k][m];
        g[m] = -acc / std::pow(f[1], m);  // [w^m]_m = f'(x0)^m
    }
    return g;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Jet jet_from_derivatives(const std::vector<double>& derivs) {
    Jet j(derivs.size());
    for (std::size_t i = 0; i < derivs.size(); ++i)
        j[i] = derivs[i] / factorial(static_cast<int>(i));
    return j;
}

std::vector<double> derivatives_from_jet(const Jet& jet) {
    std::vector<double> d(jet.size());
    for (std::size_t i = 0; i < jet.size(); ++i)
        d[i] = jet[i] * factorial(static_cast<int>(i));
    return d;
}

}  // namespace difflab
