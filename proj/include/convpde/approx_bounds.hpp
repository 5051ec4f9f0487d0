#pragma once

#include "convpde/engine.hpp"

#include <vector>

namespace convpde {

// Modulus-of-smoothness query: omega_r(f; delta) = sup over sampled x in
// [x_lo, x_hi] and steps 0 <= h <= delta of |Delta_h^r f(x)|, with
// Delta_h^r f(x) = sum_{j=0}^{r} (-1)^{r-j} C(r,j) f(x+jh). The search grid
// is refined by doubling until the result moves by < 1%; the value is a
// lower estimate of the true sup with slack controlled by that rule.
struct ModulusQuery {
    TestFunction f;
    int r = 1;
    double delta = 0.5;
    double x_lo = -8.0;
    double x_hi = 8.0;
    int x_samples = 2049;
    int h_samples = 257;
};

// Throws std::runtime_error if 6 doubling rounds fail to stabilize.
double modulus(const ModulusQuery& q);

// The quantitative approximation inequalities:
//   General           |O_t f - f| <= 2 omega_1(f; phi(t)), phi the kernel's
//                     first absolute moment (any of the four basic families)
//   MaxwellBoltzmann  <= 4 omega_1(f; t)
//   Picard            <= C omega_2(f; t)            (C unspecified: ratio)
//   Exponential       <= 2 omega_1(f; 1/t)
//   PicardJackson     <= sum_k k! C(n+1,k) omega_{n+1}(f; t)
//   WeierstrassJackson<= C_n omega_{n+1}(f; sqrt t) (C_n unspecified: ratio;
//                     lhs uses the Corrected kernel, the only variant whose
//                     gap tends to 0 with t)
enum class BoundId {
    General,
    MaxwellBoltzmann,
    Picard,
    Exponential,
    PicardJackson,
    WeierstrassJackson,
};

struct BoundRow {
    double t = 0.0;
    double lhs = 0.0;   // sup-node |O_t f - f|, direct path
    double rhs = 0.0;   // the modulus expression (without unknown constants)
    double ratio = 0.0; // lhs / rhs
    bool constant_free = true;
    // constant-free rows: lhs <= rhs; ratio rows: ratio finite.
    bool pass = false;
};

struct BoundRequest {
    BoundId which = BoundId::General;
    KernelId kernel; // selects phi for General; n for the Jackson bounds
    TestFunction f;
    std::vector<double> ts;
    GridSpec grid{-6.0, 6.0, 241};
    QuadratureSpec quad;
};

std::vector<BoundRow> certify_bound(const BoundRequest& req);

std::string bound_id_name(BoundId id);

// CSV: header `bound,f,t,lhs,rhs,ratio,pass`.
std::string bound_rows_to_csv(BoundId which, const std::string& f_label,
                              const std::vector<BoundRow>& rows);

} // namespace convpde
