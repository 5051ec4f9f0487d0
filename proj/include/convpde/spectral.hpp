#pragma once

#include "convpde/kernels.hpp"

namespace convpde {

// Fourier-multiplier symbols under the symmetric transform convention
// F(g)(xi) = (1/sqrt(2 pi)) integral g(x) e^{-i xi x} dx, for which the
// transform of the convolution is f_hat(xi) * m(xi,t) with
// m(xi,t) = sqrt(2 pi) * F^{-1}(d(t,.))(xi). All kernels are even, so every
// symbol is real and even in xi. Closed forms:
//   MaxwellBoltzmann   e^{-t^2 xi^2 / 2} (1 - t^2 xi^2)
//   PicardLaplace      1 / (1 + t^2 xi^2)
//   Exponential        t^2 / (t^2 + xi^2), evaluated as 1/(1+(xi/t)^2)
//                      so that m_E(xi,t) and m_P(xi,1/t) share the exact
//                      floating-point operation sequence
//   GaussWeierstrass   e^{-t xi^2 / 4}
//   PicardJackson      sum_k (-1)^{k+1} C(n+1,k) / (1 + k^2 t^2 xi^2)
//   WJ(AsStated)       sum_k (-1)^{k+1} C(n+1,k) (1/sqrt k) e^{-k t xi^2/4}
//   WJ(Corrected)      sum_k (-1)^{k+1} C(n+1,k) e^{-k^2 t xi^2/4}
double symbol(const KernelId& kernel, double t, double xi);

// Analytic partial derivative dm/dt of the closed forms (hand-differentiated,
// not numerical).
double symbol_dt(const KernelId& kernel, double t, double xi);

// Frequency-side residual of the PDE the symbol must satisfy; zero (to
// rounding) certifies the corresponding clause of the operator's PDE at the
// symbol level. For Jackson kernels, `component` selects the k-th summand's
// own residual (1 <= component <= n+1); component 0 returns the maximum over
// all components. The Maxwell-Boltzmann form is evaluated with cleared
// denominators, so the removable t^2 xi^2 = 1 point needs no special case.
double symbol_pde_residual(const KernelId& kernel, double t, double xi, int component = 0);

// Per-component symbols m_k of the Jackson combinations (PicardJackson:
// 1/(1+k^2 t^2 xi^2); WJ AsStated: (1/sqrt k) e^{-k t xi^2/4}; WJ Corrected:
// e^{-k^2 t xi^2/4}).
double component_symbol(const KernelId& kernel, int k, double t, double xi);
double component_symbol_dt(const KernelId& kernel, int k, double t, double xi);

// Samples d(t,.) on the uniform grid x_j = -L + j*(2L/N), j = 0..N-1, takes
// its DFT, rescales it to estimate the continuous transform, and returns the
// maximum of |sqrt(2 pi) * estimate(xi_m) - m(xi_m, t)| over the resolved
// band 0 <= xi_m = pi m / L <= xi_max / 4 (xi_max = pi N / (2L)); bins above
// a quarter of the Nyquist frequency are aliasing-dominated and excluded.
// Throws std::invalid_argument if N < 64 or L < truncation_radius(1e-12).
double discrete_symbol_mismatch(const KernelId& kernel, double t, double L, int N);

} // namespace convpde
