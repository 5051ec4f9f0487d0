#pragma once

#include "convpde/approx_bounds.hpp"
#include "convpde/spectral.hpp"

#include <string>
#include <vector>

namespace convpde {

// The five evolution equations, one per kernel family. The two Jackson
// clauses are families of per-component equations indexed by k:
//   MaxwellBoltzmann_i   u_t = t^3 u_xxxx - t^2 u_xxt + 3 t u_xx
//   Picard_ii            u_t = t^2 u_xxt + 2 t u_xx
//   Exponential_iii      u_t = (1/t^2) u_xxt - (2/t^3) u_xx
//   PicardJackson_iv     u_k,t = k^2 t^2 u_k,xxt + 2 k^2 t u_k,xx
//   WeierstrassJackson_v u_k,t = (k/4) u_k,xx
enum class Clause {
    MaxwellBoltzmann_i,
    Picard_ii,
    Exponential_iii,
    PicardJackson_iv,
    WeierstrassJackson_v,
};

Clause clause_for(const KernelId& kernel);
std::string clause_name(Clause clause, int component);

struct TimeGridSpec {
    double t_min = 0.5;
    double t_max = 1.5;
    int nt = 26;

    double dt() const { return (t_max - t_min) / (nt - 1); }
    void validate() const {
        if (!(t_min > 0.0)) throw std::invalid_argument("TimeGridSpec: t_min must be > 0");
        if (nt < 7) throw std::invalid_argument("TimeGridSpec: need nt >= 7");
        if (!(t_max > t_min)) throw std::invalid_argument("TimeGridSpec: t_max must exceed t_min");
    }
};

enum class FieldSource { OperatorComputed, Manufactured };

// u(x_i, t_j) on the tensor grid; values[i + nx*j].
struct SpaceTimeField {
    double x_min = 0.0, dx = 1.0;
    int nx = 0;
    double t_min = 0.0, dt = 1.0;
    int nt = 0;
    std::vector<double> values;

    double at(int i, int j) const { return values[i + static_cast<size_t>(nx) * j]; }
    double t_of(int j) const { return t_min + j * dt; }
    double x_of(int i) const { return x_min + i * dx; }
};

// component = 0: the whole kernel; component k >= 1: the k-th Jackson
// component u_k (u_k = P_{kt} f for clause (iv), (1/sqrt k) W_{kt} f for
// clause (v)). Operator-computed slices come from convolve_direct;
// manufactured slices are symbol(t_j, a) * cos(a x_i) exactly.
SpaceTimeField build_field(const KernelId& kernel, int component, const TestFunction& f,
                           double a, FieldSource source, const GridSpec& xgrid,
                           const TimeGridSpec& tgrid, const QuadratureSpec& quad = {});

struct ResidualEntry {
    int level = 0;
    double dx = 0.0, dt = 0.0;
    double max_residual = 0.0, rms_residual = 0.0;
};

// Max/rms of |u_t - RHS| over interior nodes, two-node bands excluded at
// every x and t boundary; second-order central stencils (u_t central in t,
// u_xx 3-point, u_xxxx 5-point, u_xxt = per-slice u_xx then central
// t-difference). Throws if the grid leaves no interior.
ResidualEntry residual_norms(const SpaceTimeField& field, Clause clause, int component);

struct ResidualReport {
    std::string pde;
    std::vector<ResidualEntry> levels;
    double observed_order = 0.0;

    bool pass() const { return observed_order >= 1.8; }
};

// Simultaneous (dx, dt) halving for `levels` levels; observed_order is the
// mean over consecutive levels of log2(max_residual ratio).
ResidualReport order_study(const KernelId& kernel, int component, const TestFunction& f,
                           double a, FieldSource source, const GridSpec& xgrid,
                           const TimeGridSpec& tgrid, int levels,
                           const QuadratureSpec& quad = {});

// CSV: `level,dx,dt,max_residual,rms_residual` rows plus a trailing
// `observed_order,<value>` record. JSON mirrors the struct field names.
std::string residual_report_to_csv(const ResidualReport& report);
std::string residual_report_to_json(const ResidualReport& report);

enum class Direction { Initial, Final };

struct BoundaryRow {
    double t = 0.0;
    int component = 0; // 0 = whole operator
    double sup_gap = 0.0;
    double bound = 0.0;
    bool pass_bound = false;
};

struct BoundaryReport {
    std::vector<BoundaryRow> rows;
    bool monotone = false; // gaps decreasing along the sequence, 10% slack
    bool pass = false;     // all rows within bound and monotone
};

// Initial direction (t decreasing toward 0): MB, Picard, GaussWeierstrass,
// PicardJackson check sup|O_t f - f|; WeierstrassJackson checks each
// component against its own limit, sup|u_k - (1/sqrt k) f| (the only limit
// available: the whole AsStated operator has signed mass != 1 and so cannot
// converge to f). Final direction (t increasing): Exponential.
// Every row carries a constant-free bound: 4 omega_1(f;t) for MB,
// 2 omega_1(f; phi(t)) for Picard/GaussWeierstrass, 2 omega_1(f;1/t) for
// Exponential, sum_k k! C(n+1,k) omega_{n+1}(f;t) for PicardJackson, and
// (2/sqrt k) omega_1(f; sqrt(k t/pi)) per WeierstrassJackson component.
BoundaryReport boundary_condition_check(const KernelId& kernel, const TestFunction& f,
                                        Direction dir, const std::vector<double>& ts,
                                        const GridSpec& grid = {-6.0, 6.0, 241},
                                        const QuadratureSpec& quad = {});

// CSV: header `t,component,sup_gap,bound,pass`.
std::string boundary_report_to_csv(const BoundaryReport& report);

} // namespace convpde
