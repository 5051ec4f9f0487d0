#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "convpde/spectral.hpp"

using namespace convpde;

namespace {

std::vector<KernelId> all_kernels() {
    std::vector<KernelId> out;
    out.push_back({Family::MaxwellBoltzmann});
    out.push_back({Family::PicardLaplace});
    out.push_back({Family::Exponential});
    out.push_back({Family::GaussWeierstrass});
    for (int n = 1; n <= 3; ++n) {
        out.push_back({Family::PicardJackson, n});
        out.push_back({Family::WeierstrassJackson, n, WjVariant::AsStated});
        out.push_back({Family::WeierstrassJackson, n, WjVariant::Corrected});
    }
    return out;
}

}  // namespace

TEST_CASE("symbol point values match closed forms") {
    CHECK(symbol({Family::PicardLaplace}, 1.0, 1.0) == 0.5);
    // The Maxwell-Boltzmann symbol has an exact zero at t*xi = 1.
    CHECK(symbol({Family::MaxwellBoltzmann}, 1.0, 1.0) == 0.0);
    CHECK(symbol({Family::Exponential}, 2.0, 2.0) == 0.5);
    CHECK(symbol({Family::GaussWeierstrass}, 1.0, 1.0) ==
          doctest::Approx(0.77880078307140486825).epsilon(1e-15));
    // Jackson Picard n=1: 2/(1+1) - 1/(1+4).
    CHECK(symbol({Family::PicardJackson, 1}, 1.0, 1.0) ==
          doctest::Approx(0.8).epsilon(1e-15));
    // Jackson Weierstrass n=1, both printed forms at (t,xi) = (1,1).
    CHECK(symbol({Family::WeierstrassJackson, 1, WjVariant::AsStated}, 1.0, 1.0) ==
          doctest::Approx(1.1287196236624563383).epsilon(1e-15));
    CHECK(symbol({Family::WeierstrassJackson, 1, WjVariant::Corrected}, 1.0, 1.0) ==
          doctest::Approx(1.1897221249713674149).epsilon(1e-15));
}

TEST_CASE("symbol at xi=0 equals the signed kernel mass") {
    for (const auto& k : all_kernels())
        for (double t : {0.25, 1.0, 4.0})
            CHECK(symbol(k, t, 0.0) == doctest::Approx(signed_mass(k)).epsilon(1e-15));
}

TEST_CASE("symbols are even and bounded by 1 for probability kernels") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uxi(0.0, 8.0);
    std::uniform_real_distribution<double> ut(0.1, 10.0);
    for (Family fam : {Family::MaxwellBoltzmann, Family::PicardLaplace,
                       Family::Exponential, Family::GaussWeierstrass}) {
        KernelId k{fam};
        for (int i = 0; i < 200; ++i) {
            const double t = ut(rng), xi = uxi(rng);
            CHECK(symbol(k, t, xi) == symbol(k, t, -xi));
            CHECK(std::abs(symbol(k, t, xi)) <= 1.0);
        }
    }
}

TEST_CASE("symbol_dt point values match hand-differentiated forms") {
    CHECK(symbol_dt({Family::GaussWeierstrass}, 1.0, 2.0) ==
          doctest::Approx(-std::exp(-1.0)).epsilon(1e-15));
    CHECK(symbol_dt({Family::PicardLaplace}, 1.0, 1.0) == -0.5);
    // MB: t xi^2 (t^2 xi^2 - 3) e^{-t^2 xi^2/2} at (1,1) = -2 e^{-1/2}.
    CHECK(symbol_dt({Family::MaxwellBoltzmann}, 1.0, 1.0) ==
          doctest::Approx(-2.0 * std::exp(-0.5)).epsilon(1e-15));
    // E: 2 xi^2 / (t^3 (1+(xi/t)^2)^2) at (1,1) = 0.5.
    CHECK(symbol_dt({Family::Exponential}, 1.0, 1.0) == 0.5);
    // All time derivatives vanish at xi = 0 (mass is conserved in t).
    for (const auto& k : all_kernels())
        CHECK(symbol_dt(k, 0.7, 0.0) == 0.0);
}

TEST_CASE("symbol_dt agrees with a central difference in t") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ut(0.1, 10.0);
    std::uniform_real_distribution<double> uxi(-8.0, 8.0);
    const double h = 1e-5;
    for (const auto& k : all_kernels()) {
        for (int i = 0; i < 25; ++i) {
            const double t = ut(rng), xi = uxi(rng);
            const double fd = (symbol(k, t + h, xi) - symbol(k, t - h, xi)) / (2.0 * h);
            CHECK(std::abs(symbol_dt(k, t, xi) - fd) < 1e-7);
        }
    }
}

TEST_CASE("component symbols compose the Jackson symbols") {
    for (int n = 1; n <= 3; ++n) {
        for (const KernelId k : {KernelId{Family::PicardJackson, n},
                                 KernelId{Family::WeierstrassJackson, n, WjVariant::AsStated},
                                 KernelId{Family::WeierstrassJackson, n, WjVariant::Corrected}}) {
            const double t = 0.8, xi = 1.7;
            double s = 0.0;
            for (int c = 1; c <= n + 1; ++c)
                s += ((c % 2 == 1) ? 1.0 : -1.0) * binomial(n + 1, c) *
                     component_symbol(k, c, t, xi);
            CHECK(s == doctest::Approx(symbol(k, t, xi)).epsilon(1e-15));
        }
    }
    CHECK(component_symbol({Family::PicardJackson, 1}, 2, 1.0, 1.0) ==
          doctest::Approx(0.2).epsilon(1e-15));
    CHECK_THROWS_AS(component_symbol({Family::PicardLaplace}, 1, 1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("frequency-side evolution-equation residuals vanish to rounding") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ut(0.1, 10.0);
    std::uniform_real_distribution<double> uxi(-8.0, 8.0);
    for (const auto& k : all_kernels()) {
        for (int i = 0; i < 60; ++i)
            CHECK(symbol_pde_residual(k, ut(rng), uxi(rng)) < 1e-12);
    }
    // Per-component access for Jackson kernels, including the zero at the
    // removable t^2 xi^2 = 1 point of Maxwell-Boltzmann.
    CHECK(symbol_pde_residual({Family::MaxwellBoltzmann}, 1.0, 1.0) < 1e-15);
    for (int c = 1; c <= 4; ++c)
        CHECK(symbol_pde_residual({Family::PicardJackson, 3}, 0.7, 2.3, c) < 1e-13);
    CHECK_THROWS_AS(symbol_pde_residual({Family::PicardJackson, 1}, 1.0, 1.0, 3),
                    std::invalid_argument);
}

TEST_CASE("exponential and Picard symbols are dual under t -> 1/t") {
    // Bit-exact when 1/t is a power of two.
    for (double t : {0.5, 2.0, 4.0})
        for (double xi : {0.3, 1.0, 5.0})
            CHECK(symbol({Family::Exponential}, t, xi) ==
                  symbol({Family::PicardLaplace}, 1.0 / t, xi));
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ut(0.1, 10.0);
    for (int i = 0; i < 50; ++i) {
        const double t = ut(rng);
        CHECK(symbol({Family::Exponential}, t, 1.3) ==
              doctest::Approx(symbol({Family::PicardLaplace}, 1.0 / t, 1.3))
                  .epsilon(1e-14));
    }
}

TEST_CASE("Gauss-Weierstrass symbol obeys the semigroup law") {
    for (double t : {0.25, 1.0, 2.0})
        for (double s : {0.5, 1.5})
            for (double xi : {0.7, 2.0, 6.0})
                CHECK(symbol({Family::GaussWeierstrass}, t, xi) *
                          symbol({Family::GaussWeierstrass}, s, xi) ==
                      doctest::Approx(symbol({Family::GaussWeierstrass}, t + s, xi))
                          .epsilon(1e-14));
}

TEST_CASE("DFT-based symbol estimate matches closed forms") {
    // Smooth Gaussian-type kernels: spectral accuracy.
    CHECK(discrete_symbol_mismatch({Family::GaussWeierstrass}, 1.0, 64.0, 1 << 14) < 1e-10);
    CHECK(discrete_symbol_mismatch({Family::MaxwellBoltzmann}, 1.0, 64.0, 1 << 14) < 1e-10);
    CHECK(discrete_symbol_mismatch({Family::WeierstrassJackson, 1, WjVariant::AsStated},
                                   1.0, 64.0, 1 << 14) < 1e-10);
    // Kinked kernels: second-order in the sampling step; halving the step
    // divides the mismatch by about 4.
    const double c14 = discrete_symbol_mismatch({Family::PicardLaplace}, 1.0, 64.0, 1 << 14);
    const double c15 = discrete_symbol_mismatch({Family::PicardLaplace}, 1.0, 64.0, 1 << 15);
    CHECK(c14 < 1e-3);
    CHECK(c15 < 0.6 * c14);
}

TEST_CASE("DFT-based symbol estimate validates its inputs") {
    CHECK_THROWS_AS(discrete_symbol_mismatch({Family::PicardLaplace}, 1.0, 64.0, 32),
                    std::invalid_argument);
    // L = 16 is below the t=2 truncation radius of the Picard kernel (~58).
    CHECK_THROWS_AS(discrete_symbol_mismatch({Family::PicardLaplace}, 2.0, 16.0, 1 << 14),
                    std::invalid_argument);
}
