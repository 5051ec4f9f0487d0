#pragma once

#include "convpde/grid.hpp"
#include "convpde/kernels.hpp"
#include "convpde/test_functions.hpp"

namespace convpde {

// Direct path: for each output node x, approximates
// integral_{-R}^{R} f(x-v) d(t,v) dv with R = truncation_radius(kernel, t,
// quad.eps_tail) and composite fixed-order Gauss-Legendre panels; the panel
// layout always places a breakpoint at v = 0, which is mandatory for the
// kernels with a kink there (PicardLaplace, Exponential, PicardJackson).
GridFunction convolve_direct(const TestFunction& f, const KernelId& kernel, double t,
                             const GridSpec& grid, const QuadratureSpec& quad = {});

// FFT path: samples the kernel at the spacing of f_samples, zero-pads both
// sequences to a power of two at least N_f + N_k - 1, multiplies spectra,
// and returns the central N_f values scaled by dx. Nodes within one kernel
// truncation radius of either end are boundary-contaminated; their count is
// recorded in the result's boundary_pad. Throws std::invalid_argument when
// dx under-resolves the kernel (dx > t/4 for Gaussian-type families,
// dx > min(t, 1/t)/4 for exponential-type) or the span is below twice the
// truncation radius.
GridFunction convolve_fft(const GridFunction& f_samples, const KernelId& kernel, double t,
                          double eps_tail = 1e-12);

// Max over non-contaminated nodes of |direct - fft| on the same grid.
double path_agreement(const TestFunction& f, const KernelId& kernel, double t,
                      const GridSpec& grid, const QuadratureSpec& quad = {});

} // namespace convpde
