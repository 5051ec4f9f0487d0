#pragma once

#include "convpde/engine.hpp"

namespace convpde {

enum class Path { Direct, Fft };

struct OperatorRequest {
    KernelId kernel;
    double t = 1.0;
    TestFunction f;
    GridSpec grid;
    QuadratureSpec quad;
    Path path = Path::Direct;
};

// O_t(f) on the requested grid via the requested path.
GridFunction apply(const OperatorRequest& req);

enum class JacksonKind { Picard, Weierstrass };

struct JacksonResult {
    GridFunction combined;
    std::vector<GridFunction> components; // u_k, k = 1..n+1
};

// The alternating binomial combination sum_k (-1)^{k+1} C(n+1,k) u_k with
// u_k = P_{kt}(f) (Picard) or u_k = (1/sqrt k) W_{kt}(f) (Weierstrass),
// computed from the component operators; each u_k is returned as well.
JacksonResult jackson_combination(JacksonKind kind, int n, double t, const TestFunction& f,
                                  const GridSpec& grid, const QuadratureSpec& quad = {});

struct CombinationGaps {
    // apply(Jackson kernel form) vs the combination of component operators;
    // expected ~0 for Picard and for Weierstrass(AsStated).
    double kernel_vs_combination = 0.0;
    // Weierstrass only: the literal difference-form integral
    // -(1/(2 C*(t))) int sum_{k>=1} (-1)^k C(n+1,k) f(x+kv) e^{-v^2/t} dv,
    // C*(t) = sqrt(t pi)/2, vs the AsStated kernel form. Expected NONZERO
    // for n >= 1: the change of variables u = kv turns the difference form
    // into the Corrected kernel, not the AsStated one.
    double difference_form_vs_stated = 0.0;
};

CombinationGaps combination_identity_gap(JacksonKind kind, int n, double t,
                                         const TestFunction& f, const GridSpec& grid,
                                         const QuadratureSpec& quad = {});

// Max-node |E_t(f) - P_{1/t}(f)|; the two integrals coincide under t -> 1/t.
double duality_gap(double t, const TestFunction& f, const GridSpec& grid,
                   const QuadratureSpec& quad = {});

// Max interior-node |W_t(W_s(f)) - W_{t+s}(f)| on the FFT path, with the
// accumulated boundary-contamination bands of both sides excluded.
double semigroup_gap(double t, double s, const TestFunction& f, const GridSpec& grid,
                     double eps_tail = 1e-12);

} // namespace convpde
