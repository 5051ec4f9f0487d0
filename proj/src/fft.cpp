#include "convpde/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace convpde {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}
} // namespace

std::vector<std::complex<double>> real_dft_halfspectrum(const std::vector<double>& x) {
    const size_t n = x.size();
    if (n < 2) throw std::invalid_argument("real_dft_halfspectrum: need at least 2 samples");
    std::vector<double> in(x);
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                    reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    if (!plan) throw std::runtime_error("FFTW plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

std::vector<double> linear_convolution(const std::vector<double>& a,
                                       const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("linear_convolution: empty input");
    const size_t out_len = a.size() + b.size() - 1;
    const size_t m = next_pow2(out_len);
    std::vector<double> pa(m, 0.0), pb(m, 0.0);
    std::copy(a.begin(), a.end(), pa.begin());
    std::copy(b.begin(), b.end(), pb.begin());

    std::vector<std::complex<double>> fa(m / 2 + 1), fb(m / 2 + 1);
    std::vector<double> out(m);
    fftw_plan plan_a, plan_b, plan_inv;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan_a = fftw_plan_dft_r2c_1d(static_cast<int>(m), pa.data(),
                                      reinterpret_cast<fftw_complex*>(fa.data()),
                                      FFTW_ESTIMATE);
        plan_b = fftw_plan_dft_r2c_1d(static_cast<int>(m), pb.data(),
                                      reinterpret_cast<fftw_complex*>(fb.data()),
                                      FFTW_ESTIMATE);
        plan_inv = fftw_plan_dft_c2r_1d(static_cast<int>(m),
                                        reinterpret_cast<fftw_complex*>(fa.data()),
                                        out.data(), FFTW_ESTIMATE);
    }
    if (!plan_a || !plan_b || !plan_inv)
        throw std::runtime_error("FFTW plan creation failed");
    fftw_execute(plan_a);
    fftw_execute(plan_b);
    for (size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
    fftw_execute(plan_inv); // unnormalized: scales by m
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan_a);
        fftw_destroy_plan(plan_b);
        fftw_destroy_plan(plan_inv);
    }
    std::vector<double> result(out.begin(), out.begin() + out_len);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (double& v : result) v *= inv_m;
    return result;
}

} // namespace convpde
