#pragma once

#include <string>
#include <vector>

namespace convpde {

// One run of the verification driver. Every field maps 1:1 to a kebab-case
// command-line flag; a JSON config file with the same keys can pre-populate
// any of them, with explicit flags taking precedence.
struct RunConfig {
    std::string command; // density|moment|symbol|convolve|identity|pde-check|bounds

    std::string kernel = "picard-laplace";
    int n = 1;                         // Jackson order
    std::string variant = "as-stated"; // weierstrass-jackson only
    double t = 1.0;
    double s = 0.5; // second time for the semigroup identity
    std::vector<double> t_list;

    std::string f = "cos";
    double a = 1.0; // frequency for cos/sin, value for constant

    double x_min = -8.0;
    double x_max = 8.0;
    int n_points = 257;

    double eps_tail = 1e-12;
    int panels = 32;
    int nodes = 16;

    int levels = 3;
    int component = -1; // -1 = auto (1 for Jackson kernels, 0 otherwise)
    double t_min = 0.5; // pde-check time window
    double t_max = 1.5;
    int nt = 26;

    std::string check = "duality"; // identity: duality|picard-combination|
                                   // weierstrass-combination|
                                   // weierstrass-difference-form|semigroup
    std::string which = "m";       // symbol: m|dm-dt|residual; bounds: general|
                                   // mb|picard|exponential|picard-jackson|
                                   // weierstrass-jackson
    std::string source = "manufactured"; // pde-check field source
    std::string path = "direct";         // convolve: direct|fft
    bool boundary = false;               // pde-check: boundary-condition table
    bool strict = false; // make the expected difference-form mismatch fatal

    std::string output;  // exact artifact path
    std::string out_dir; // directory for <command>-<kernel>-<timestamp>.<ext>
    std::string format = "csv"; // csv|json
};

// Loads a JSON object whose keys are the kebab-case flag names
// (e.g. {"command": "bounds", "t-list": [1, 0.5]}); unknown keys are
// rejected with a diagnostic.
RunConfig config_from_json_file(const std::string& path);

// Executes the configured command. Artifact tables go to `output` if set,
// else to a timestamped file under `out_dir` if set, else to stdout; a
// one-line status summary goes to stderr. Returns 0 when every performed
// certification passes, 1 when any fails, 2 on usage errors.
int run(const RunConfig& config);

} // namespace convpde
