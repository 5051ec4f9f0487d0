#include "convpde/engine.hpp"

#include "convpde/fft.hpp"

#include <algorithm>
#include <cmath>

namespace convpde {

GridFunction convolve_direct(const TestFunction& f, const KernelId& kernel, double t,
                             const GridSpec& grid, const QuadratureSpec& quad) {
    if (!(t > 0.0)) throw std::domain_error("convolve_direct requires t > 0");
    grid.validate();
    quad.validate();
    kernel.validate();
    const double R = truncation_radius(kernel, t, quad.eps_tail);
    GridFunction out;
    out.x_min = grid.x_min;
    out.dx = grid.dx();
    out.values.resize(grid.n);
    out.label = "conv-" + kernel.name();
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x_min + i * out.dx;
        auto g = [&](double v) { return f(x - v) * eval_density(kernel, t, v); };
        // split_at_zero=false still uses the same per-side layout; the split
        // node at 0 is free for smooth kernels and required for kinked ones.
        out.values[i] = integrate_symmetric(g, R, quad.panels_per_side, quad.nodes_per_panel);
    }
    return out;
}

namespace {
bool gaussian_type(const KernelId& kernel) {
    return kernel.family == Family::MaxwellBoltzmann ||
           kernel.family == Family::GaussWeierstrass ||
           kernel.family == Family::WeierstrassJackson;
}
} // namespace

GridFunction convolve_fft(const GridFunction& f_samples, const KernelId& kernel, double t,
                          double eps_tail) {
    if (!(t > 0.0)) throw std::domain_error("convolve_fft requires t > 0");
    f_samples.validate();
    kernel.validate();
    const double dx = f_samples.dx;
    const double scale_limit =
        gaussian_type(kernel) ? t / 4.0 : std::min(t, 1.0 / t) / 4.0;
    if (dx > scale_limit)
        throw std::invalid_argument(
            "convolve_fft: dx under-resolves the kernel (dx > scale/4)");
    const double R = truncation_radius(kernel, t, eps_tail);
    const double span = dx * static_cast<double>(f_samples.values.size() - 1);
    if (span <= 2.0 * R)
        throw std::invalid_argument(
            "convolve_fft: grid span must exceed twice the truncation radius");

    const int half = static_cast<int>(std::ceil(R / dx));
    std::vector<double> kernel_samples(2 * half + 1);
    for (int j = 0; j <= 2 * half; ++j)
        kernel_samples[j] = eval_density(kernel, t, (j - half) * dx);

    std::vector<double> full = linear_convolution(f_samples.values, kernel_samples);
    GridFunction out;
    out.x_min = f_samples.x_min;
    out.dx = dx;
    out.values.assign(full.begin() + half,
                      full.begin() + half + static_cast<long>(f_samples.values.size()));
    for (double& v : out.values) v *= dx;
    out.label = "conv-fft-" + kernel.name();
    out.boundary_pad = half;
    return out;
}

double path_agreement(const TestFunction& f, const KernelId& kernel, double t,
                      const GridSpec& grid, const QuadratureSpec& quad) {
    GridFunction direct = convolve_direct(f, kernel, t, grid, quad);
    GridFunction samples;
    samples.x_min = grid.x_min;
    samples.dx = grid.dx();
    samples.values.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) samples.values[i] = f(samples.x(i));
    GridFunction fft = convolve_fft(samples, kernel, t, quad.eps_tail);
    const size_t pad = static_cast<size_t>(fft.boundary_pad);
    if (2 * pad >= fft.values.size())
        throw std::invalid_argument("path_agreement: no uncontaminated interior nodes");
    double worst = 0.0;
    for (size_t i = pad; i < fft.values.size() - pad; ++i)
        worst = std::max(worst, std::abs(direct.values[i] - fft.values[i]));
    return worst;
}

} // namespace convpde
