#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace convpde {

// Uniform 1-D grid with sampled real values; the universal carrier of f and
// of operator outputs. Node i sits at x_min + i*dx.
struct GridFunction {
    double x_min = 0.0;
    double dx = 1.0;
    std::vector<double> values;
    std::string label;
    // Number of nodes at EACH end whose values are contaminated by domain
    // truncation (FFT path); 0 means every node is trustworthy.
    int boundary_pad = 0;

    double x(size_t i) const { return x_min + static_cast<double>(i) * dx; }
    size_t size() const { return values.size(); }

    void validate() const {
        if (values.size() < 2) throw std::invalid_argument("GridFunction: need N >= 2");
        if (!(dx > 0.0)) throw std::invalid_argument("GridFunction: dx must be > 0");
        for (double v : values)
            if (!std::isfinite(v))
                throw std::invalid_argument("GridFunction: values must be finite");
    }
};

// Output grid request: N nodes from x_min to x_max inclusive.
struct GridSpec {
    double x_min = -8.0;
    double x_max = 8.0;
    int n = 257;

    double dx() const { return (x_max - x_min) / (n - 1); }
    void validate() const {
        if (n < 2) throw std::invalid_argument("GridSpec: need at least 2 nodes");
        if (!(x_max > x_min)) throw std::invalid_argument("GridSpec: x_max must exceed x_min");
    }
};

// Shortest-width fixed formatting used by every writer: 17 significant
// digits, enough to round-trip any double.
std::string format_double(double v);

// CSV with header `x,value`, one row per node, 17 significant digits.
void write_grid_csv(const GridFunction& g, const std::string& path);
std::string grid_to_csv(const GridFunction& g);

// Parses the same format; rejects non-monotone or non-equispaced x columns
// (spacing tolerance 1e-9 relative).
GridFunction read_grid_csv(const std::string& path);

} // namespace convpde
