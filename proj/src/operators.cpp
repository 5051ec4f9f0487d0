#include "convpde/operators.hpp"

#include "convpde/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace convpde {

namespace {
double max_abs_diff(const GridFunction& a, const GridFunction& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}
} // namespace

GridFunction apply(const OperatorRequest& req) {
    if (req.path == Path::Direct)
        return convolve_direct(req.f, req.kernel, req.t, req.grid, req.quad);
    GridFunction samples;
    samples.x_min = req.grid.x_min;
    samples.dx = req.grid.dx();
    samples.values.resize(req.grid.n);
    for (int i = 0; i < req.grid.n; ++i) samples.values[i] = req.f(samples.x(i));
    return convolve_fft(samples, req.kernel, req.t, req.quad.eps_tail);
}

JacksonResult jackson_combination(JacksonKind kind, int n, double t, const TestFunction& f,
                                  const GridSpec& grid, const QuadratureSpec& quad) {
    if (n < 1) throw std::invalid_argument("jackson_combination requires n >= 1");
    JacksonResult result;
    result.components.reserve(n + 1);
    KernelId base;
    base.family = (kind == JacksonKind::Picard) ? Family::PicardLaplace
                                                : Family::GaussWeierstrass;
    for (int k = 1; k <= n + 1; ++k) {
        GridFunction uk = convolve_direct(f, base, k * t, grid, quad);
        if (kind == JacksonKind::Weierstrass) {
            const double w = 1.0 / std::sqrt(double(k));
            for (double& v : uk.values) v *= w;
        }
        uk.label = "u_" + std::to_string(k);
        result.components.push_back(std::move(uk));
    }
    result.combined = result.components[0];
    result.combined.label = (kind == JacksonKind::Picard ? "picard-jackson" : "weierstrass-jackson");
    for (size_t i = 0; i < result.combined.values.size(); ++i) {
        double s = 0.0;
        for (int k = 1; k <= n + 1; ++k) {
            double sign = (k % 2 == 1) ? 1.0 : -1.0;
            s += sign * binomial(n + 1, k) * result.components[k - 1].values[i];
        }
        result.combined.values[i] = s;
    }
    return result;
}

CombinationGaps combination_identity_gap(JacksonKind kind, int n, double t,
                                         const TestFunction& f, const GridSpec& grid,
                                         const QuadratureSpec& quad) {
    if (n < 1) throw std::invalid_argument("combination_identity_gap requires n >= 1");
    CombinationGaps gaps;
    KernelId kernel_form;
    kernel_form.n = n;
    kernel_form.family = (kind == JacksonKind::Picard) ? Family::PicardJackson
                                                       : Family::WeierstrassJackson;
    kernel_form.variant = WjVariant::AsStated;
    GridFunction via_kernel = convolve_direct(f, kernel_form, t, grid, quad);
    JacksonResult combo = jackson_combination(kind, n, t, f, grid, quad);
    gaps.kernel_vs_combination = max_abs_diff(via_kernel, combo.combined);

    if (kind == JacksonKind::Weierstrass) {
        // Literal difference-form integral, quadratured independently in the
        // ORIGINAL variable v (no change of variables): the Gaussian factor
        // e^{-v^2/t} sets the truncation radius regardless of k.
        const double R = 1.3 * std::sqrt(t * std::log(1e14));
        const double c_star = std::sqrt(t * std::numbers::pi) / 2.0;
        GridFunction diff_form = via_kernel;
        for (size_t i = 0; i < diff_form.values.size(); ++i) {
            const double x = diff_form.x(i);
            auto g = [&](double v) {
                double s = 0.0;
                for (int k = 1; k <= n + 1; ++k) {
                    double sign = (k % 2 == 0) ? 1.0 : -1.0; // (-1)^k
                    s += sign * binomial(n + 1, k) * f(x + k * v);
                }
                return s * std::exp(-v * v / t);
            };
            diff_form.values[i] =
                -integrate_symmetric(g, R, quad.panels_per_side, quad.nodes_per_panel) /
                (2.0 * c_star);
        }
        gaps.difference_form_vs_stated = max_abs_diff(diff_form, via_kernel);
    }
    return gaps;
}

double duality_gap(double t, const TestFunction& f, const GridSpec& grid,
                   const QuadratureSpec& quad) {
    KernelId exponential{Family::Exponential};
    KernelId picard{Family::PicardLaplace};
    GridFunction via_e = convolve_direct(f, exponential, t, grid, quad);
    GridFunction via_p = convolve_direct(f, picard, 1.0 / t, grid, quad);
    return max_abs_diff(via_e, via_p);
}

double semigroup_gap(double t, double s, const TestFunction& f, const GridSpec& grid,
                     double eps_tail) {
    if (!(t > 0.0 && s > 0.0)) throw std::domain_error("semigroup_gap requires t, s > 0");
    KernelId w{Family::GaussWeierstrass};
    GridFunction samples;
    samples.x_min = grid.x_min;
    samples.dx = grid.dx();
    samples.values.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) samples.values[i] = f(samples.x(i));

    GridFunction ws = convolve_fft(samples, w, s, eps_tail);
    GridFunction wt_ws = convolve_fft(ws, w, t, eps_tail);
    GridFunction wts = convolve_fft(samples, w, t + s, eps_tail);
    const size_t pad = static_cast<size_t>(
        std::max(ws.boundary_pad + wt_ws.boundary_pad, wts.boundary_pad));
    if (2 * pad >= wts.values.size())
        throw std::invalid_argument("semigroup_gap: no uncontaminated interior nodes");
    double worst = 0.0;
    for (size_t i = pad; i < wts.values.size() - pad; ++i)
        worst = std::max(worst, std::abs(wt_ws.values[i] - wts.values[i]));
    return worst;
}

} // namespace convpde
