#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "convpde/kernels.hpp"

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

TEST_CASE("density point values match closed forms") {
    // Maxwell-Boltzmann vanishes quadratically at the origin.
    CHECK(eval_density({Family::MaxwellBoltzmann}, 1.0, 0.0) == 0.0);
    // Value at x = t equals e^{-1/2}/sqrt(2*pi).
    CHECK(eval_density({Family::MaxwellBoltzmann}, 1.0, 1.0) ==
          doctest::Approx(0.24197072451914334980).epsilon(1e-15));
    // Picard peak is 1/(2t).
    CHECK(eval_density({Family::PicardLaplace}, 1.0, 0.0) == 0.5);
    CHECK(eval_density({Family::PicardLaplace}, 0.25, 0.0) == 2.0);
    // Exponential-rate peak is t/2.
    CHECK(eval_density({Family::Exponential}, 2.0, 0.0) == 1.0);
    // Gauss-Weierstrass peak is 1/sqrt(pi t).
    CHECK(eval_density({Family::GaussWeierstrass}, 1.0, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
    // Jackson Picard n=1 at origin: (2 - 1/2) / (2t).
    CHECK(eval_density({Family::PicardJackson, 1}, 1.0, 0.0) ==
          doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("densities are even functions") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ux(0.0, 6.0);
    for (const auto& k : all_kernels()) {
        for (double t : {0.3, 1.0, 2.5}) {
            for (int i = 0; i < 50; ++i) {
                const double x = ux(rng);
                CHECK(eval_density(k, t, x) == eval_density(k, t, -x));
            }
        }
    }
}

TEST_CASE("non-Jackson densities are nonnegative") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ux(-8.0, 8.0);
    std::uniform_real_distribution<double> ut(0.1, 5.0);
    for (Family fam : {Family::MaxwellBoltzmann, Family::PicardLaplace,
                       Family::Exponential, Family::GaussWeierstrass}) {
        KernelId k{fam};
        for (int i = 0; i < 250; ++i)
            CHECK(eval_density(k, ut(rng), ux(rng)) >= 0.0);
    }
}

TEST_CASE("signed_mass matches binomial alternating sums") {
    for (const auto& k : all_kernels()) {
        if (k.family == Family::WeierstrassJackson && k.variant == WjVariant::AsStated)
            continue;
        CHECK(signed_mass(k) == doctest::Approx(1.0).epsilon(1e-15));
    }
    // n=1 alternating sum 2 - 1/sqrt(2).
    CHECK(signed_mass({Family::WeierstrassJackson, 1, WjVariant::AsStated}) ==
          doctest::Approx(1.2928932188134524756).epsilon(1e-15));
    // n=2: 3 - 3/sqrt(2) + 1/sqrt(3).
    const double s2 = 3.0 - 3.0 / std::sqrt(2.0) + 1.0 / std::sqrt(3.0);
    CHECK(signed_mass({Family::WeierstrassJackson, 2, WjVariant::AsStated}) ==
          doctest::Approx(s2).epsilon(1e-15));
}

TEST_CASE("normalization deficit is small across families and scales") {
    QuadratureSpec quad;
    for (const auto& k : all_kernels()) {
        for (double t : {0.25, 1.0, 4.0}) {
            CHECK(normalization_deficit(k, t, quad) < 1e-10);
        }
    }
}

TEST_CASE("first absolute moment closed forms") {
    // Maxwell-Boltzmann: (2*sqrt(2)/sqrt(pi)) * t.
    CHECK(first_abs_moment({Family::MaxwellBoltzmann}, 1.0, MomentMethod::Analytic) ==
          doctest::Approx(1.5957691216057307118).epsilon(1e-15));
    CHECK(first_abs_moment({Family::PicardLaplace}, 3.0, MomentMethod::Analytic) == 3.0);
    CHECK(first_abs_moment({Family::Exponential}, 4.0, MomentMethod::Analytic) == 0.25);
    CHECK(first_abs_moment({Family::GaussWeierstrass}, 4.0, MomentMethod::Analytic) ==
          doctest::Approx(std::sqrt(4.0 / std::numbers::pi)).epsilon(1e-15));
    // The Maxwell-Boltzmann moment is strictly below 2t.
    for (double t : {0.1, 1.0, 10.0})
        CHECK(first_abs_moment({Family::MaxwellBoltzmann}, t, MomentMethod::Analytic) <
              2.0 * t);
}

TEST_CASE("quadrature moment agrees with analytic moment") {
    QuadratureSpec quad;
    for (double t : {0.1, 1.0, 10.0}) {
        for (Family fam : {Family::MaxwellBoltzmann, Family::PicardLaplace,
                           Family::Exponential, Family::GaussWeierstrass}) {
            KernelId k{fam};
            const double a = first_abs_moment(k, t, MomentMethod::Analytic);
            const double q = first_abs_moment(k, t, MomentMethod::Quadrature, quad);
            CHECK(std::abs(q - a) / a < 1e-8);
        }
    }
}

TEST_CASE("analytic moment is unavailable for Jackson kernels") {
    CHECK_THROWS_AS(
        first_abs_moment({Family::PicardJackson, 1}, 1.0, MomentMethod::Analytic),
        std::invalid_argument);
    QuadratureSpec quad;
    // The signed moment cancels exactly: int |x| e^{-|x|/(kt)}/(2t) dx = k^2 t,
    // so the n=1 combination gives sum (-1)^{k+1} C(2,k) (1/k) k^2 t
    //   = (2 - 2) t = 0. This cancellation is what buys the order-2 rate.
    const double q =
        first_abs_moment({Family::PicardJackson, 1}, 1.5, MomentMethod::Quadrature, quad);
    CHECK(std::abs(q) < 1e-9);
}

TEST_CASE("scale duality between Picard and exponential-rate densities") {
    // d_E(t, x) = d_P(1/t, x); exact in floating point when 1/t is exact.
    for (double x : {0.0, 0.5, 1.0, 3.0}) {
        CHECK(eval_density({Family::Exponential}, 2.0, x) ==
              eval_density({Family::PicardLaplace}, 0.5, x));
        CHECK(eval_density({Family::Exponential}, 3.0, x) ==
              doctest::Approx(eval_density({Family::PicardLaplace}, 1.0 / 3.0, x))
                  .epsilon(1e-14));
    }
}

TEST_CASE("truncation radius bounds the tail mass") {
    // For the Picard density the tail outside R has mass exactly e^{-R/t}.
    for (double t : {0.5, 1.0, 2.0}) {
        const double R = truncation_radius({Family::PicardLaplace}, t, 1e-12);
        CHECK(std::exp(-R / t) < 1e-12);
    }
    // Gaussian families: erfc tail.
    for (double t : {0.5, 1.0, 2.0}) {
        const double R = truncation_radius({Family::GaussWeierstrass}, t, 1e-12);
        CHECK(std::erfc(R / std::sqrt(t)) < 1e-12);
    }
    // Radii grow with t for spreading kernels, shrink for the concentrating one.
    CHECK(truncation_radius({Family::PicardLaplace}, 2.0, 1e-12) >
          truncation_radius({Family::PicardLaplace}, 1.0, 1e-12));
    CHECK(truncation_radius({Family::Exponential}, 2.0, 1e-12) <
          truncation_radius({Family::Exponential}, 1.0, 1e-12));
}

TEST_CASE("kernel naming and parsing round trip") {
    CHECK(KernelId{Family::MaxwellBoltzmann}.name() == "maxwell-boltzmann");
    CHECK(KernelId{Family::PicardJackson, 2}.name() == "picard-jackson-n2");
    CHECK((KernelId{Family::WeierstrassJackson, 1, WjVariant::AsStated}.name()) ==
          "weierstrass-jackson-n1-as-stated");
    CHECK((KernelId{Family::WeierstrassJackson, 3, WjVariant::Corrected}.name()) ==
          "weierstrass-jackson-n3-corrected");
    // Short aliases resolve to the right families.
    CHECK(parse_kernel_name("mb", 1, "as-stated").family == Family::MaxwellBoltzmann);
    CHECK(parse_kernel_name("picard", 1, "as-stated").family == Family::PicardLaplace);
    CHECK(parse_kernel_name("e", 1, "as-stated").family == Family::Exponential);
    CHECK(parse_kernel_name("w", 1, "as-stated").family == Family::GaussWeierstrass);
    CHECK(parse_kernel_name("pj", 2, "as-stated").n == 2);
    CHECK(parse_kernel_name("wj", 1, "corrected").variant == WjVariant::Corrected);
    CHECK_THROWS_AS(parse_kernel_name("nope", 1, "as-stated"), std::invalid_argument);
    CHECK_THROWS_AS(parse_kernel_name("wj", 1, "bogus"), std::invalid_argument);
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(eval_density({Family::PicardLaplace}, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(eval_density({Family::PicardLaplace}, -1.0, 1.0), std::domain_error);
    KernelId bad{Family::PicardJackson, 0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(truncation_radius({Family::PicardLaplace}, 1.0, 2.0),
                    std::invalid_argument);
}

TEST_CASE("binomial coefficients are exact") {
    CHECK(binomial(4, 2) == 6.0);
    CHECK(binomial(2, 1) == 2.0);
    CHECK(binomial(3, 3) == 1.0);
    CHECK(binomial(8, 4) == 70.0);
}
