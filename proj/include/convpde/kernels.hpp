#pragma once

#include "convpde/quadrature.hpp"

#include <stdexcept>
#include <string>

namespace convpde {

enum class Family {
    MaxwellBoltzmann,
    PicardLaplace,
    Exponential,
    GaussWeierstrass,
    PicardJackson,
    WeierstrassJackson,
};

// Which form of the Weierstrass-Jackson kernel to use. AsStated builds the
// combination from e^{-u^2/(k t)} components (heat rate k/4 per component);
// Corrected uses e^{-u^2/(k^2 t)} with weight 1/k, which is what the change
// of variables u = k v in the difference representation actually yields.
// The two differ for n >= 1; both are kept and the gap between them is
// measured, not resolved.
enum class WjVariant { AsStated, Corrected };

struct KernelId {
    Family family = Family::PicardLaplace;
    int n = 1;                               // Jackson order; ignored otherwise
    WjVariant variant = WjVariant::AsStated; // WeierstrassJackson only

    bool is_jackson() const {
        return family == Family::PicardJackson || family == Family::WeierstrassJackson;
    }
    // Kernels with a |x| kink at 0; quadrature must split panels there.
    bool has_kink() const {
        return family == Family::PicardLaplace || family == Family::Exponential ||
               family == Family::PicardJackson;
    }
    // Jackson kernels are alternating sums and take negative values.
    bool is_signed() const { return is_jackson(); }

    void validate() const {
        if (is_jackson() && n < 1)
            throw std::invalid_argument("KernelId: Jackson families require n >= 1");
    }
    std::string name() const;
};

KernelId parse_kernel_name(const std::string& name, int n, const std::string& variant);

// Total signed mass of the kernel: 1 for every family except
// WeierstrassJackson(AsStated), whose components carry weight 1/k but mass
// sqrt(k)/k, giving sum_k (-1)^{k+1} C(n+1,k)/sqrt(k).
double signed_mass(const KernelId& kernel);

// The density d(t,x) exactly as defined, evaluated pointwise.
double eval_density(const KernelId& kernel, double t, double x);

// |integral of d(t,.) - signed_mass| computed by the panel engine.
double normalization_deficit(const KernelId& kernel, double t, const QuadratureSpec& quad = {});

enum class MomentMethod { Analytic, Quadrature };

// First absolute moment phi(t) = integral |v| d(t,v) dv. Analytic closed
// forms exist for the four basic families:
//   MaxwellBoltzmann  (2*sqrt(2)/sqrt(pi)) * t
//   PicardLaplace     t
//   Exponential       1/t
//   GaussWeierstrass  sqrt(t/pi)
// Jackson kernels are signed; only the quadrature method is offered and it
// reports the signed moment (|v| times the raw signed kernel).
double first_abs_moment(const KernelId& kernel, double t, MomentMethod method,
                        const QuadratureSpec& quad = {});

// Radius R with guaranteed absolute-kernel mass < eps outside [-R, R], from
// closed-form tail bounds (see kernels.cpp for the per-family constants),
// then doubled until a numeric tail check confirms the bound.
double truncation_radius(const KernelId& kernel, double t, double eps);

int binomial(int n, int k);

} // namespace convpde
