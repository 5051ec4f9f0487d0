#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace convpde {

// Nodes and weights of the q-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Computes the q-point rule by Newton iteration on the Legendre polynomial
// P_q, starting from the Chebyshev-angle estimates of its roots. Exact for
// polynomials of degree <= 2q-1. Throws std::invalid_argument for q outside
// [2, 64].
const GaussLegendreRule& gauss_legendre(int q);

// Integration policy for the improper kernel integrals: how far to truncate
// and how finely to panel the truncated range.
struct QuadratureSpec {
    double eps_tail = 1e-12;  // kernel mass allowed outside [-R, R]
    int panels_per_side = 32; // uniform panels on each of [-R,0] and [0,R]
    int nodes_per_panel = 16; // Gauss-Legendre order within each panel
    bool split_at_zero = true;

    void validate() const {
        if (!(eps_tail > 0.0 && eps_tail < 1.0))
            throw std::invalid_argument("QuadratureSpec: eps_tail must lie in (0,1)");
        if (panels_per_side < 4)
            throw std::invalid_argument("QuadratureSpec: panels_per_side must be >= 4");
        if (nodes_per_panel < 4 || nodes_per_panel > 64)
            throw std::invalid_argument("QuadratureSpec: nodes_per_panel must lie in [4,64]");
    }
};

// Integrates g over [-R, R] with `panels` uniform panels per side and the
// q-point Gauss-Legendre rule on each panel. The panel split always places a
// breakpoint at 0, so integrands with a kink there are smooth within every
// panel. Summation order is fixed (negative side ascending, then positive
// side ascending) for deterministic results.
double integrate_symmetric(const std::function<double(double)>& g, double R,
                           int panels, int q);

// Same layout, but integrates over one side only: [0, R] (side=+1) or
// [-R, 0] (side=-1).
double integrate_one_side(const std::function<double(double)>& g, double R,
                          int panels, int q, int side);

} // namespace convpde
