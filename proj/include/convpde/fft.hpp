#pragma once

#include <complex>
#include <vector>

namespace convpde {

// Forward DFT of a real sequence: returns bins 0..n/2 (the nonnegative
// half-spectrum), X_m = sum_j x_j e^{-2 pi i j m / n}. FFTW backend; plan
// creation is serialized internally (the FFTW planner is not thread-safe),
// execution is reentrant.
std::vector<std::complex<double>> real_dft_halfspectrum(const std::vector<double>& x);

// Full discrete linear convolution of a and b (length a.size()+b.size()-1),
// computed by zero-padding to a power of two and multiplying spectra.
std::vector<double> linear_convolution(const std::vector<double>& a,
                                       const std::vector<double>& b);

} // namespace convpde
