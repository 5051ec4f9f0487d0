#include "convpde/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

void add_common_options(CLI::App* sub, convpde::RunConfig& cfg) {
    sub->add_option("--kernel", cfg.kernel,
                    "maxwell-boltzmann|picard-laplace|exponential|gauss-weierstrass|"
                    "picard-jackson|weierstrass-jackson (short: mb,p,e,w,pj,wj)");
    sub->add_option("--n", cfg.n, "Jackson order n >= 1");
    sub->add_option("--variant", cfg.variant, "weierstrass-jackson kernel form")
        ->check(CLI::IsMember({"as-stated", "corrected"}));
    sub->add_option("--t", cfg.t, "scale parameter t > 0");
    sub->add_option("--s", cfg.s, "second scale for the semigroup identity");
    sub->add_option("--t-list", cfg.t_list, "comma-separated t values")
        ->delimiter(',');
    sub->add_option("--f", cfg.f, "cos|sin|bump|abs-sin|hat|constant");
    sub->add_option("--a", cfg.a, "frequency for cos/sin, value for constant");
    sub->add_option("--x-min", cfg.x_min, "grid start");
    sub->add_option("--x-max", cfg.x_max, "grid end");
    sub->add_option("--n-points", cfg.n_points, "grid node count");
    sub->add_option("--eps-tail", cfg.eps_tail, "kernel mass allowed outside [-R,R]");
    sub->add_option("--panels", cfg.panels, "quadrature panels per side");
    sub->add_option("--nodes", cfg.nodes, "Gauss-Legendre nodes per panel");
    sub->add_flag("--strict", cfg.strict,
                  "treat the expected weierstrass-difference-form mismatch as a failure");
    sub->add_option("--output", cfg.output, "write the table to this exact path");
    sub->add_option("--out", cfg.out_dir,
                    "write to <dir>/<command>-<kernel>-<timestamp>.<ext>");
    sub->add_option("--format", cfg.format, "table format")
        ->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    convpde::RunConfig cfg;
    // Pre-scan for --config so flags parsed afterwards override file values.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                cfg = convpde::config_from_json_file(argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "usage error: " << e.what() << '\n';
                return 2;
            }
        }
    }

    CLI::App app{"Convolution-operator verification driver: evaluates the five "
                 "probability-density convolution operators by quadrature and FFT, "
                 "and certifies their symbols, evolution equations, boundary "
                 "conditions and approximation error bounds."};
    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON config file with flag-named keys; explicit flags override it");
    app.require_subcommand(0, 1);

    CLI::App* density = app.add_subcommand("density", "sample the kernel d(t,x) on a grid");
    CLI::App* moment =
        app.add_subcommand("moment", "first absolute moment phi(t), analytic vs quadrature");
    CLI::App* symbol = app.add_subcommand(
        "symbol", "Fourier multiplier m(xi,t), its t-derivative, or its PDE residual");
    CLI::App* convolve =
        app.add_subcommand("convolve", "apply the operator to f on a grid (direct or FFT)");
    CLI::App* identity =
        app.add_subcommand("identity", "structural identities among the operators");
    CLI::App* pde_check = app.add_subcommand(
        "pde-check", "finite-difference residual order study, or boundary-condition table");
    CLI::App* bounds =
        app.add_subcommand("bounds", "certify the modulus-of-smoothness error bounds");

    for (CLI::App* sub : {density, moment, symbol, convolve, identity, pde_check, bounds})
        add_common_options(sub, cfg);

    symbol->add_option("--which", cfg.which, "m|dm-dt|residual")
        ->check(CLI::IsMember({"m", "dm-dt", "residual"}));
    symbol->add_option("--component", cfg.component, "Jackson component k (0 = worst over k)");
    convolve->add_option("--path", cfg.path, "direct|fft")
        ->check(CLI::IsMember({"direct", "fft"}));
    identity->add_option("--check", cfg.check,
                         "duality|picard-combination|weierstrass-combination|"
                         "weierstrass-difference-form|semigroup");
    pde_check->add_option("--levels", cfg.levels, "refinement levels (>= 2)");
    pde_check->add_option("--component", cfg.component,
                          "Jackson component k (default 1 for Jackson kernels)");
    pde_check->add_option("--source", cfg.source, "field source")
        ->check(CLI::IsMember({"manufactured", "operator"}));
    pde_check->add_option("--t-min", cfg.t_min, "field time window start");
    pde_check->add_option("--t-max", cfg.t_max, "field time window end");
    pde_check->add_option("--nt", cfg.nt, "field time nodes");
    pde_check->add_flag("--boundary", cfg.boundary,
                        "emit the initial/final-condition table instead of residuals");
    bounds->add_option("--which", cfg.which,
                       "general|mb|picard|exponential|picard-jackson|weierstrass-jackson");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (CLI::App* sub : {density, moment, symbol, convolve, identity, pde_check, bounds})
        if (sub->parsed()) cfg.command = sub->get_name();
    return convpde::run(cfg);
}
