#include "convpde/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace convpde {

namespace {

// Legendre polynomial P_q and derivative P_q' at x, by the three-term
// recurrence.
std::pair<double, double> legendre_pair(int q, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= q; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = q * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

GaussLegendreRule compute_rule(int q) {
    GaussLegendreRule rule;
    rule.nodes.resize(q);
    rule.weights.resize(q);
    for (int i = 0; i < q; ++i) {
        // Chebyshev-angle initial guess for the i-th root of P_q.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre_pair(q, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre_pair(q, x);
        (void)p;
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int q) {
    if (q < 2 || q > 64)
        throw std::invalid_argument("gauss_legendre: order must lie in [2,64]");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, compute_rule(q)).first;
    return it->second;
}

double integrate_one_side(const std::function<double(double)>& g, double R,
                          int panels, int q, int side) {
    const GaussLegendreRule& rule = gauss_legendre(q);
    const double w = R / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        // Panel [p*w, (p+1)*w] mirrored to the negative axis when side < 0;
        // endpoints are ordered lo < hi on both sides.
        double lo = (side > 0) ? p * w : -(p + 1) * w;
        double hi = (side > 0) ? (p + 1) * w : -static_cast<double>(p) * w;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double panel_sum = 0.0;
        for (int j = 0; j < q; ++j)
            panel_sum += rule.weights[j] * g(mid + half * rule.nodes[j]);
        total += half * panel_sum;
    }
    return total;
}

double integrate_symmetric(const std::function<double(double)>& g, double R,
                           int panels, int q) {
    return integrate_one_side(g, R, panels, q, -1) +
           integrate_one_side(g, R, panels, q, +1);
}

} // namespace convpde
