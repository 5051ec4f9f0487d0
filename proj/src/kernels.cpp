#include "convpde/kernels.hpp"

#include <cmath>
#include <numbers>

namespace convpde {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);

void require_t(double t) {
    if (!(t > 0.0)) throw std::domain_error("kernel evaluation requires t > 0");
}
} // namespace

int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return static_cast<int>(r);
}

std::string KernelId::name() const {
    switch (family) {
        case Family::MaxwellBoltzmann: return "maxwell-boltzmann";
        case Family::PicardLaplace: return "picard-laplace";
        case Family::Exponential: return "exponential";
        case Family::GaussWeierstrass: return "gauss-weierstrass";
        case Family::PicardJackson: return "picard-jackson-n" + std::to_string(n);
        case Family::WeierstrassJackson:
            return "weierstrass-jackson-n" + std::to_string(n) +
                   (variant == WjVariant::AsStated ? "-as-stated" : "-corrected");
    }
    return "unknown";
}

KernelId parse_kernel_name(const std::string& name, int n, const std::string& variant) {
    KernelId id;
    if (name == "mb" || name == "maxwell-boltzmann")
        id.family = Family::MaxwellBoltzmann;
    else if (name == "picard" || name == "picard-laplace" || name == "p")
        id.family = Family::PicardLaplace;
    else if (name == "exponential" || name == "exp" || name == "e")
        id.family = Family::Exponential;
    else if (name == "gauss-weierstrass" || name == "gauss" || name == "w")
        id.family = Family::GaussWeierstrass;
    else if (name == "picard-jackson" || name == "pj")
        id.family = Family::PicardJackson;
    else if (name == "weierstrass-jackson" || name == "wj")
        id.family = Family::WeierstrassJackson;
    else
        throw std::invalid_argument("unknown kernel name: " + name);
    id.n = n;
    if (variant == "as-stated")
        id.variant = WjVariant::AsStated;
    else if (variant == "corrected")
        id.variant = WjVariant::Corrected;
    else
        throw std::invalid_argument("unknown kernel variant: " + variant);
    id.validate();
    return id;
}

double signed_mass(const KernelId& kernel) {
    if (kernel.family == Family::WeierstrassJackson && kernel.variant == WjVariant::AsStated) {
        // Component k has weight 1/k but integral sqrt(k t pi)/(k sqrt(pi t))
        // = 1/sqrt(k), so the signed total is sum (-1)^{k+1} C(n+1,k)/sqrt(k).
        double s = 0.0;
        for (int k = 1; k <= kernel.n + 1; ++k)
            s += ((k % 2 == 1) ? 1.0 : -1.0) * binomial(kernel.n + 1, k) / std::sqrt(double(k));
        return s;
    }
    return 1.0;
}

double eval_density(const KernelId& kernel, double t, double x) {
    require_t(t);
    kernel.validate();
    switch (kernel.family) {
        case Family::MaxwellBoltzmann:
            return (x * x) * std::exp(-x * x / (2.0 * t * t)) / (kSqrt2Pi * t * t * t);
        case Family::PicardLaplace:
            return std::exp(-std::abs(x) / t) / (2.0 * t);
        case Family::Exponential:
            return t * std::exp(-t * std::abs(x)) / 2.0;
        case Family::GaussWeierstrass:
            return std::exp(-x * x / t) / std::sqrt(kPi * t);
        case Family::PicardJackson: {
            double s = 0.0;
            for (int k = 1; k <= kernel.n + 1; ++k) {
                double sign = (k % 2 == 1) ? 1.0 : -1.0;
                s += sign * binomial(kernel.n + 1, k) *
                     std::exp(-std::abs(x) / (k * t)) / (2.0 * t * k);
            }
            return s;
        }
        case Family::WeierstrassJackson: {
            double s = 0.0;
            for (int k = 1; k <= kernel.n + 1; ++k) {
                double sign = (k % 2 == 1) ? 1.0 : -1.0;
                double denom = (kernel.variant == WjVariant::AsStated)
                                   ? k * t
                                   : double(k) * k * t;
                s += sign * binomial(kernel.n + 1, k) *
                     std::exp(-x * x / denom) / (k * std::sqrt(kPi * t));
            }
            return s;
        }
    }
    throw std::logic_error("unreachable kernel family");
}

double normalization_deficit(const KernelId& kernel, double t, const QuadratureSpec& quad) {
    require_t(t);
    quad.validate();
    double R = truncation_radius(kernel, t, quad.eps_tail);
    double integral = integrate_symmetric(
        [&](double x) { return eval_density(kernel, t, x); }, R,
        quad.panels_per_side, quad.nodes_per_panel);
    return std::abs(integral - signed_mass(kernel));
}

double first_abs_moment(const KernelId& kernel, double t, MomentMethod method,
                        const QuadratureSpec& quad) {
    require_t(t);
    if (method == MomentMethod::Analytic) {
        switch (kernel.family) {
            case Family::MaxwellBoltzmann:
                return (2.0 * std::sqrt(2.0) / std::sqrt(kPi)) * t;
            case Family::PicardLaplace:
                return t;
            case Family::Exponential:
                return 1.0 / t;
            case Family::GaussWeierstrass:
                return std::sqrt(t / kPi);
            default:
                throw std::invalid_argument(
                    "first_abs_moment: no analytic closed form for signed Jackson "
                    "kernels; use MomentMethod::Quadrature (signed moment)");
        }
    }
    quad.validate();
    double R = truncation_radius(kernel, t, quad.eps_tail);
    return integrate_symmetric(
        [&](double x) { return std::abs(x) * eval_density(kernel, t, x); }, R,
        quad.panels_per_side, quad.nodes_per_panel);
}

namespace {

// Closed-form bound on the absolute-kernel mass outside [-R, R]. Each bound
// is elementary and conservative:
//   PicardLaplace     exact: e^{-R/t}
//   Exponential       exact: e^{-t R}
//   MaxwellBoltzmann  exact: erfc(R/(sqrt(2) t)) + sqrt(2/pi)(R/t)e^{-R^2/(2t^2)}
//   GaussWeierstrass  erfc(R/sqrt(t)) <= e^{-R^2/t}
//   PicardJackson     sum_k C(n+1,k) e^{-R/(k t)} <= 2^{n+1} e^{-R/((n+1)t)}
//   WJ(AsStated)      sum_k C(n+1,k) erfc(R/sqrt(k t))/sqrt(k)
//   WJ(Corrected)     sum_k C(n+1,k) erfc(R/(k sqrt(t)))
double tail_mass_bound(const KernelId& kernel, double t, double R) {
    switch (kernel.family) {
        case Family::PicardLaplace:
            return std::exp(-R / t);
        case Family::Exponential:
            return std::exp(-t * R);
        case Family::MaxwellBoltzmann: {
            double z = R / t;
            return std::erfc(z / std::sqrt(2.0)) +
                   std::sqrt(2.0 / kPi) * z * std::exp(-z * z / 2.0);
        }
        case Family::GaussWeierstrass:
            return std::erfc(R / std::sqrt(t));
        case Family::PicardJackson: {
            double s = 0.0;
            for (int k = 1; k <= kernel.n + 1; ++k)
                s += binomial(kernel.n + 1, k) * std::exp(-R / (k * t));
            return s;
        }
        case Family::WeierstrassJackson: {
            double s = 0.0;
            for (int k = 1; k <= kernel.n + 1; ++k) {
                double scale = (kernel.variant == WjVariant::AsStated)
                                   ? std::sqrt(double(k) * t)
                                   : k * std::sqrt(t);
                double w = (kernel.variant == WjVariant::AsStated)
                               ? 1.0 / std::sqrt(double(k))
                               : 1.0;
                s += binomial(kernel.n + 1, k) * w * std::erfc(R / scale);
            }
            return s;
        }
    }
    throw std::logic_error("unreachable kernel family");
}

} // namespace

double truncation_radius(const KernelId& kernel, double t, double eps) {
    require_t(t);
    kernel.validate();
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("truncation_radius: eps must lie in (0,1)");
    double le = std::log(1.0 / eps);
    double R = 0.0;
    switch (kernel.family) {
        case Family::PicardLaplace: R = 1.05 * t * le; break;
        case Family::Exponential: R = 1.05 * le / t; break;
        case Family::MaxwellBoltzmann: R = 2.0 * t * std::sqrt(le); break;
        case Family::GaussWeierstrass: R = 1.3 * std::sqrt(t * le); break;
        case Family::PicardJackson: R = 1.2 * (kernel.n + 1) * t * le; break;
        case Family::WeierstrassJackson:
            R = (kernel.variant == WjVariant::AsStated)
                    ? 1.3 * std::sqrt((kernel.n + 1) * t * le)
                    : 1.3 * (kernel.n + 1) * std::sqrt(t * le);
            break;
    }
    for (int round = 0; round < 80 && !(tail_mass_bound(kernel, t, R) < eps); ++round)
        R *= 2.0;
    return R;
}

} // namespace convpde
