#include "convpde/pde_verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace convpde {

Clause clause_for(const KernelId& kernel) {
    switch (kernel.family) {
        case Family::MaxwellBoltzmann: return Clause::MaxwellBoltzmann_i;
        case Family::PicardLaplace: return Clause::Picard_ii;
        case Family::Exponential: return Clause::Exponential_iii;
        case Family::PicardJackson: return Clause::PicardJackson_iv;
        case Family::GaussWeierstrass:
        case Family::WeierstrassJackson: return Clause::WeierstrassJackson_v;
    }
    throw std::logic_error("unreachable kernel family");
}

std::string clause_name(Clause clause, int component) {
    std::string base;
    switch (clause) {
        case Clause::MaxwellBoltzmann_i: base = "maxwell-boltzmann-i"; break;
        case Clause::Picard_ii: base = "picard-ii"; break;
        case Clause::Exponential_iii: base = "exponential-iii"; break;
        case Clause::PicardJackson_iv: base = "picard-jackson-iv"; break;
        case Clause::WeierstrassJackson_v: base = "weierstrass-jackson-v"; break;
    }
    if (component > 0) base += "-k" + std::to_string(component);
    return base;
}

namespace {

// Component operator u_k of the Jackson combinations as a (kernel, t,
// prefactor) triple: clause (iv) u_k = P_{kt} f, clause (v)
// u_k = (1/sqrt k) W_{kt} f.
struct ComponentOp {
    KernelId kernel;
    double t_eff;
    double prefactor;
};

ComponentOp component_op(const KernelId& kernel, int component, double t) {
    if (component == 0) return {kernel, t, 1.0};
    if (kernel.family == Family::PicardJackson)
        return {KernelId{Family::PicardLaplace}, component * t, 1.0};
    if (kernel.family == Family::WeierstrassJackson)
        return {KernelId{Family::GaussWeierstrass}, component * t,
                1.0 / std::sqrt(double(component))};
    throw std::invalid_argument("component index valid only for Jackson kernels");
}

} // namespace

SpaceTimeField build_field(const KernelId& kernel, int component, const TestFunction& f,
                           double a, FieldSource source, const GridSpec& xgrid,
                           const TimeGridSpec& tgrid, const QuadratureSpec& quad) {
    xgrid.validate();
    tgrid.validate();
    if (component > 0 && !kernel.is_jackson())
        throw std::invalid_argument("build_field: component index valid only for Jackson kernels");
    if (component > kernel.n + 1)
        throw std::invalid_argument("build_field: component exceeds n+1");
    SpaceTimeField field;
    field.x_min = xgrid.x_min;
    field.dx = xgrid.dx();
    field.nx = xgrid.n;
    field.t_min = tgrid.t_min;
    field.dt = tgrid.dt();
    field.nt = tgrid.nt;
    field.values.resize(static_cast<size_t>(field.nx) * field.nt);
    for (int j = 0; j < field.nt; ++j) {
        const double t = field.t_of(j);
        if (source == FieldSource::Manufactured) {
            const double m = (component == 0) ? symbol(kernel, t, a)
                                              : component_symbol(kernel, component, t, a);
            for (int i = 0; i < field.nx; ++i)
                field.values[i + static_cast<size_t>(field.nx) * j] =
                    m * std::cos(a * field.x_of(i));
        } else {
            ComponentOp op = component_op(kernel, component, t);
            GridFunction slice = convolve_direct(f, op.kernel, op.t_eff, xgrid, quad);
            for (int i = 0; i < field.nx; ++i)
                field.values[i + static_cast<size_t>(field.nx) * j] =
                    op.prefactor * slice.values[i];
        }
    }
    return field;
}

ResidualEntry residual_norms(const SpaceTimeField& field, Clause clause, int component) {
    const int nx = field.nx, nt = field.nt;
    if (nx - 4 < 5 || nt - 4 < 3)
        throw std::invalid_argument(
            "residual_norms: need >= 5 interior x-nodes and >= 3 interior t-nodes "
            "after excluding two-node boundary bands");
    if ((clause == Clause::PicardJackson_iv || clause == Clause::WeierstrassJackson_v) &&
        component < 1)
        throw std::invalid_argument("residual_norms: Jackson clauses are per-component (k >= 1)");
    const double dx = field.dx, dt = field.dt;
    const double inv_dx2 = 1.0 / (dx * dx), inv_dx4 = inv_dx2 * inv_dx2;
    const double inv_2dt = 1.0 / (2.0 * dt);
    const int k = component;

    // Precompute u_xx on all slices for interior x (needed by u_xxt).
    std::vector<double> uxx(static_cast<size_t>(nx) * nt, 0.0);
    for (int j = 0; j < nt; ++j)
        for (int i = 1; i < nx - 1; ++i)
            uxx[i + static_cast<size_t>(nx) * j] =
                (field.at(i + 1, j) - 2.0 * field.at(i, j) + field.at(i - 1, j)) * inv_dx2;

    double max_res = 0.0, sum_sq = 0.0;
    size_t count = 0;
    for (int j = 2; j < nt - 2; ++j) {
        const double t = field.t_of(j);
        for (int i = 2; i < nx - 2; ++i) {
            const double ut = (field.at(i, j + 1) - field.at(i, j - 1)) * inv_2dt;
            const double uxx_c = uxx[i + static_cast<size_t>(nx) * j];
            const double uxxt = (uxx[i + static_cast<size_t>(nx) * (j + 1)] -
                                 uxx[i + static_cast<size_t>(nx) * (j - 1)]) *
                                inv_2dt;
            double rhs = 0.0;
            switch (clause) {
                case Clause::MaxwellBoltzmann_i: {
                    const double uxxxx =
                        (field.at(i + 2, j) - 4.0 * field.at(i + 1, j) + 6.0 * field.at(i, j) -
                         4.0 * field.at(i - 1, j) + field.at(i - 2, j)) *
                        inv_dx4;
                    rhs = t * t * t * uxxxx - t * t * uxxt + 3.0 * t * uxx_c;
                    break;
                }
                case Clause::Picard_ii:
                    rhs = t * t * uxxt + 2.0 * t * uxx_c;
                    break;
                case Clause::Exponential_iii:
                    rhs = uxxt / (t * t) - 2.0 * uxx_c / (t * t * t);
                    break;
                case Clause::PicardJackson_iv:
                    rhs = double(k) * k * t * t * uxxt + 2.0 * k * k * t * uxx_c;
                    break;
                case Clause::WeierstrassJackson_v:
                    rhs = (k / 4.0) * uxx_c;
                    break;
            }
            const double r = std::abs(ut - rhs);
            max_res = std::max(max_res, r);
            sum_sq += r * r;
            ++count;
        }
    }
    ResidualEntry entry;
    entry.dx = dx;
    entry.dt = dt;
    entry.max_residual = max_res;
    entry.rms_residual = std::sqrt(sum_sq / static_cast<double>(count));
    return entry;
}

ResidualReport order_study(const KernelId& kernel, int component, const TestFunction& f,
                           double a, FieldSource source, const GridSpec& xgrid,
                           const TimeGridSpec& tgrid, int levels,
                           const QuadratureSpec& quad) {
    if (levels < 2) throw std::invalid_argument("order_study: need at least 2 levels");
    const Clause clause = clause_for(kernel);
    ResidualReport report;
    report.pde = clause_name(clause, component);
    for (int level = 0; level < levels; ++level) {
        const int factor = 1 << level;
        GridSpec xg = xgrid;
        xg.n = (xgrid.n - 1) * factor + 1;
        TimeGridSpec tg = tgrid;
        tg.nt = (tgrid.nt - 1) * factor + 1;
        SpaceTimeField field = build_field(kernel, component, f, a, source, xg, tg, quad);
        ResidualEntry entry = residual_norms(field, clause, component);
        entry.level = level;
        report.levels.push_back(entry);
    }
    double sum_orders = 0.0;
    for (size_t l = 0; l + 1 < report.levels.size(); ++l)
        sum_orders += std::log2(report.levels[l].max_residual /
                                report.levels[l + 1].max_residual);
    report.observed_order = sum_orders / static_cast<double>(report.levels.size() - 1);
    return report;
}

std::string residual_report_to_csv(const ResidualReport& report) {
    std::string out = "level,dx,dt,max_residual,rms_residual\n";
    for (const ResidualEntry& e : report.levels) {
        out += std::to_string(e.level);
        out += ',' + format_double(e.dx);
        out += ',' + format_double(e.dt);
        out += ',' + format_double(e.max_residual);
        out += ',' + format_double(e.rms_residual);
        out += '\n';
    }
    out += "observed_order," + format_double(report.observed_order) + '\n';
    return out;
}

std::string residual_report_to_json(const ResidualReport& report) {
    std::string out = "{\n  \"pde\": \"" + report.pde + "\",\n  \"levels\": [\n";
    for (size_t i = 0; i < report.levels.size(); ++i) {
        const ResidualEntry& e = report.levels[i];
        out += "    {\"level\": " + std::to_string(e.level);
        out += ", \"dx\": " + format_double(e.dx);
        out += ", \"dt\": " + format_double(e.dt);
        out += ", \"max_residual\": " + format_double(e.max_residual);
        out += ", \"rms_residual\": " + format_double(e.rms_residual) + "}";
        if (i + 1 < report.levels.size()) out += ',';
        out += '\n';
    }
    out += "  ],\n  \"observed_order\": " + format_double(report.observed_order) + "\n}\n";
    return out;
}

namespace {

double omega_of(const TestFunction& f, int r, double delta) {
    ModulusQuery q;
    q.f = f;
    q.r = r;
    q.delta = delta;
    return modulus(q);
}

double factorial_d(int k) {
    double r = 1.0;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}

} // namespace

BoundaryReport boundary_condition_check(const KernelId& kernel, const TestFunction& f,
                                        Direction dir, const std::vector<double>& ts,
                                        const GridSpec& grid, const QuadratureSpec& quad) {
    kernel.validate();
    if (ts.size() < 2)
        throw std::invalid_argument("boundary_condition_check: need at least 2 t values");
    const bool is_exponential = kernel.family == Family::Exponential;
    if (dir == Direction::Final && !is_exponential)
        throw std::invalid_argument(
            "boundary_condition_check: final direction applies to the Exponential family only");
    if (dir == Direction::Initial && is_exponential)
        throw std::invalid_argument(
            "boundary_condition_check: the Exponential family satisfies a FINAL condition");
    for (size_t i = 1; i < ts.size(); ++i) {
        const bool ok = (dir == Direction::Initial) ? ts[i] < ts[i - 1] : ts[i] > ts[i - 1];
        if (!ok)
            throw std::invalid_argument(
                "boundary_condition_check: t-sequence must be decreasing (initial) or "
                "increasing (final)");
    }

    const double pi = std::numbers::pi;
    BoundaryReport report;
    const bool per_component = kernel.family == Family::WeierstrassJackson;
    const int k_max = per_component ? kernel.n + 1 : 0;

    for (double t : ts) {
        if (per_component) {
            for (int k = 1; k <= k_max; ++k) {
                // u_k = (1/sqrt k) W_{kt} f; limit (1/sqrt k) f; general
                // bound applied to the unit-mass Gaussian at scale kt.
                KernelId w{Family::GaussWeierstrass};
                GridFunction uk = convolve_direct(f, w, k * t, grid, quad);
                const double wgt = 1.0 / std::sqrt(double(k));
                double gap = 0.0;
                for (size_t i = 0; i < uk.values.size(); ++i)
                    gap = std::max(gap, wgt * std::abs(uk.values[i] - f(uk.x(i))));
                BoundaryRow row;
                row.t = t;
                row.component = k;
                row.sup_gap = gap;
                row.bound = wgt * 2.0 * omega_of(f, 1, std::sqrt(k * t / pi));
                row.pass_bound = gap <= row.bound + 1e-9;
                report.rows.push_back(row);
            }
            continue;
        }
        GridFunction out = convolve_direct(f, kernel, t, grid, quad);
        double gap = 0.0;
        for (size_t i = 0; i < out.values.size(); ++i)
            gap = std::max(gap, std::abs(out.values[i] - f(out.x(i))));
        BoundaryRow row;
        row.t = t;
        row.sup_gap = gap;
        switch (kernel.family) {
            case Family::MaxwellBoltzmann:
                row.bound = 4.0 * omega_of(f, 1, t);
                break;
            case Family::PicardLaplace:
                row.bound = 2.0 * omega_of(f, 1, t); // phi_P(t) = t
                break;
            case Family::GaussWeierstrass:
                row.bound = 2.0 * omega_of(f, 1, std::sqrt(t / pi)); // phi_W
                break;
            case Family::Exponential:
                row.bound = 2.0 * omega_of(f, 1, 1.0 / t);
                break;
            case Family::PicardJackson: {
                double coeff = 0.0;
                for (int j = 1; j <= kernel.n + 1; ++j)
                    coeff += factorial_d(j) * binomial(kernel.n + 1, j);
                row.bound = coeff * omega_of(f, kernel.n + 1, t);
                break;
            }
            default:
                throw std::logic_error("unreachable");
        }
        row.pass_bound = gap <= row.bound + 1e-9;
        report.rows.push_back(row);
    }

    // Monotone decrease along the sequence (per component column), 10% slack.
    report.monotone = true;
    const int cols = per_component ? k_max : 1;
    const size_t steps = ts.size();
    for (int c = 0; c < cols; ++c) {
        for (size_t s = 1; s < steps; ++s) {
            const double prev = report.rows[(s - 1) * cols + c].sup_gap;
            const double cur = report.rows[s * cols + c].sup_gap;
            if (cur > 1.1 * prev + 1e-12) report.monotone = false;
        }
    }
    report.pass = report.monotone;
    for (const BoundaryRow& row : report.rows)
        if (!row.pass_bound) report.pass = false;
    return report;
}

std::string boundary_report_to_csv(const BoundaryReport& report) {
    std::string out = "t,component,sup_gap,bound,pass\n";
    for (const BoundaryRow& r : report.rows) {
        out += format_double(r.t);
        out += ',' + std::to_string(r.component);
        out += ',' + format_double(r.sup_gap);
        out += ',' + format_double(r.bound);
        out += ',';
        out += (r.pass_bound ? "true" : "false");
        out += '\n';
    }
    return out;
}

} // namespace convpde
